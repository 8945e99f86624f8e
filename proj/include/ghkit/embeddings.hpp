#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ghkit/metric.hpp"

namespace ghkit {

/// Index of the cube ([0, m]^n, sup metric) in the disjoint family.
struct BlockIndex {
  std::int64_t m = 1;
  std::int64_t n = 1;

  friend bool operator==(const BlockIndex&, const BlockIndex&) = default;
};

/// T(m, n) = m + (m + n - 2)(m + n - 1) / 2, a bijection of positive pairs
/// onto the positive integers enumerating anti-diagonals.
std::int64_t pairing_T(std::int64_t m, std::int64_t n);
inline std::int64_t pairing_T(BlockIndex b) { return pairing_T(b.m, b.n); }
BlockIndex pairing_T_inverse(std::int64_t k);

/// a_i(m) = 4m(i - 1).
std::int64_t a_sequence(std::int64_t m, std::int64_t i);

/// Largest T for which separation_constant is available in 64-bit integers.
inline constexpr std::int64_t kMaxSeparationT = 40;

/// D(m, n) = max{4m(n + 2), max over earlier blocks of D + m + 2^T(m,n)}.
/// Throws OverflowGuard when T(m, n) > kMaxSeparationT.
std::int64_t separation_constant(std::int64_t m, std::int64_t n);
inline std::int64_t separation_constant(BlockIndex b) {
  return separation_constant(b.m, b.n);
}

/// A point of [0, m]^n.
class CubePoint {
 public:
  /// Throws InvalidInput when coords has the wrong length or leaves [0, m].
  CubePoint(BlockIndex block, std::vector<double> coords);

  const BlockIndex& block() const { return block_; }
  const std::vector<double>& coords() const { return coords_; }

 private:
  BlockIndex block_;
  std::vector<double> coords_;
};

/// Sup distance between two points of the same block.
double sup_distance(const CubePoint& x, const CubePoint& y);

/// {a_i(m) + x_i | i = 1..n} U {D(m, n)}.
Point1DSet phi(const CubePoint& p);

struct ControlReport {
  BlockIndex block;
  std::int64_t pairs_checked = 0;
  std::int64_t violations = 0;
  /// Pairs where hausdorff(phi x, phi y) != sup distance exactly.
  std::int64_t hausdorff_mismatches = 0;
  /// Points whose image diameter leaves [D - m, D].
  std::int64_t diameter_violations = 0;
  /// eh / sup-distance over pairs with positive sup distance.
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  std::vector<std::string> details;

  bool clean() const {
    return violations == 0 && hausdorff_mismatches == 0 && diameter_violations == 0;
  }
};

/// Checks d/2 - eps <= eh(phi x, phi y) <= d + eps on `trials` random pairs
/// (plus every pair of cube corners when n <= 4). Coordinates are drawn on a
/// dyadic grid so sums and differences are exact. Trial t uses its own RNG
/// stream derived from (seed, t).
ControlReport verify_control_functions(BlockIndex block, std::int64_t trials,
                                       std::uint64_t seed, double eps = kEps);

/// Diameter-gap bound between the images of two distinct blocks.
struct BlockSeparation {
  BlockIndex larger;  // block with larger T
  BlockIndex smaller;
  /// D(larger) - D(smaller) - larger.m, i.e. twice the bound.
  std::int64_t twice_bound = 0;
  std::int64_t t_max = 0;

  double value() const { return static_cast<double>(twice_bound) / 2.0; }
  /// twice_bound >= 2^t_max, i.e. value() >= 2^(t_max - 1), in integers.
  bool certified() const { return twice_bound >= (std::int64_t{1} << t_max); }
};

/// Throws InvalidInput when b1 == b2.
BlockSeparation block_separation_lower_bound(BlockIndex b1, BlockIndex b2);

}  // namespace ghkit
