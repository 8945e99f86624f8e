#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "ghkit/metric.hpp"

namespace ghkit {

/// A relation between {0..n-1} and {0..m-1} that is total in both directions.
class Correspondence {
 public:
  using Pair = std::pair<std::size_t, std::size_t>;

  /// Sorts and deduplicates `pairs`; throws InvalidCorrespondence when an
  /// index is out of range or some point on either side is unrelated.
  Correspondence(std::size_t n, std::size_t m, std::vector<Pair> pairs);

  /// X x Y.
  static Correspondence full(std::size_t n, std::size_t m);
  /// {(i, i)}.
  static Correspondence identity(std::size_t n);

  std::size_t source_size() const { return n_; }
  std::size_t target_size() const { return m_; }
  const std::vector<Pair>& pairs() const { return pairs_; }

  friend bool operator==(const Correspondence&, const Correspondence&) = default;

 private:
  std::size_t n_, m_;
  std::vector<Pair> pairs_;
};

struct LowerBounds {
  double distance_set = 0.0;
  double diameter = 0.0;

  double best() const { return distance_set > diameter ? distance_set : diameter; }
};

struct GHResult {
  double value = 0.0;
  Correspondence witness;
  LowerBounds lower_bounds;
};

/// Limits for the exact searches. The map-pair search visits at most
/// m^n * n^m leaves, so the default guard keeps it at desk scale.
struct SearchOptions {
  std::size_t guard = 8;
};

/// max over (i1, j1), (i2, j2) in r of |x(i1, i2) - y(j1, j2)|.
double distortion(const Correspondence& r, const Network& x, const Network& y);

/// Half the minimal distortion over all correspondences, by branch and bound
/// over pairs of maps (f: X -> Y, g: Y -> X). Works for arbitrary networks.
GHResult network_distance(const Network& x, const Network& y,
                          const SearchOptions& opts = {});

/// Gromov-Hausdorff distance of finite metric spaces (equal to their network
/// distance).
GHResult gh_exact(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                  const SearchOptions& opts = {});

/// Oracle: enumerates every subset of the n x m pair grid. Sizes above
/// `max_points` (default 3) are rejected.
GHResult gh_bruteforce(const Network& x, const Network& y,
                       std::size_t max_points = 3);

/// d_H(D(x), D(y)) / 2.
double lower_bound_distance_set(const Network& x, const Network& y);

/// |diam x - diam y| / 2.
double lower_bound_diameter(const Network& x, const Network& y);

LowerBounds lower_bounds(const Network& x, const Network& y);

}  // namespace ghkit
