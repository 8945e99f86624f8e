#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ghkit/metric.hpp"

namespace ghkit {

/// Element indices into a SampledSpace, sorted and unique.
using Member = std::vector<std::size_t>;
using CoverClass = std::vector<Member>;

/// A finite sample of finite subsets of [0, inf) that all contain 0, with the
/// pairwise Hausdorff distances precomputed.
class SampledSpace {
 public:
  /// Throws InvalidInput if some element misses 0 or has a negative point.
  explicit SampledSpace(std::vector<Point1DSet> elements);

  /// Sample of two-point elements {0, x} (x = 0 gives {0}). On such a sample
  /// d_H({0, x}, {0, y}) = |x - y|, so it doubles as a sample of the
  /// half-line.
  static SampledSpace from_line(const std::vector<double>& xs);

  std::size_t size() const { return elements_.size(); }
  const Point1DSet& element(std::size_t i) const { return elements_[i]; }
  const std::vector<Point1DSet>& elements() const { return elements_; }
  double distance(std::size_t i, std::size_t j) const { return d_[i * size() + j]; }

 private:
  std::vector<Point1DSet> elements_;
  std::vector<double> d_;
};

/// Classed family of subsets with its certificate parameters: members in the
/// same class are meant to be more than `r` apart and every member at most
/// `bound` across.
struct CoverFamily {
  double r = 0.0;
  double bound = 0.0;
  std::vector<CoverClass> classes;
};

/// Min distance between elements of two members (+inf if either is empty).
double member_distance(const SampledSpace& s, const Member& a, const Member& b);
/// Max distance within a member (0 for fewer than two elements).
double member_diameter(const SampledSpace& s, const Member& a);

struct X1Assignment {
  int cls = 0;            // i in {0, 1}
  std::int64_t block = 0; // k
};

/// The unique (i, k) with x in [(4k + 2i) r, (4k + 2i + 2) r).
X1Assignment x1_cover_assign(double x, double r);

/// Two-class cover of a sample of {0, x} elements, grouped by
/// x1_cover_assign on the largest point. Classes are r-disjoint, members are
/// 2r-bounded. Throws InvalidInput on elements with more than two points.
CoverFamily x1_cover(const SampledSpace& s, double r);

struct AbsorbResult {
  CoverClass members;
  /// sparse_bound + 2(r + R), R = max(dense_bound, r).
  double bound = 0.0;
};

/// Every sparse member absorbs the dense members within distance r; dense
/// members farther than r from all sparse members are kept as they are.
///
/// Hypotheses, checked on the sample with HypothesisViolated on failure:
///  - "dense-disjoint": dense is r-disjoint,
///  - "dense-bound": dense members have diameter <= dense_bound,
///  - "sparse-disjoint": sparse is 5R-disjoint with R = max(dense_bound, r),
///  - "sparse-bound": sparse members have diameter <= sparse_bound.
/// Under them the result is r-disjoint: two absorbed members keep distance
/// > 5R - 2(r + R) >= r.
AbsorbResult absorb_union(const SampledSpace& s, const CoverClass& sparse,
                          double sparse_bound, const CoverClass& dense,
                          double dense_bound, double r);

enum class Stratum { Tilde, Near };

struct Decomposition {
  Stratum stratum = Stratum::Tilde;
  /// Set for the tilde stratum: the element itself.
  std::optional<Point1DSet> tilde_part;
  /// Set for the near stratum: the points above r, plus 0.
  std::optional<Point1DSet> near_part;
  /// d_H(c, near_part) for the near stratum, 0 otherwise.
  double gap = 0.0;
};

/// Splits c at radius r. Elements whose nonzero points all exceed r form the
/// tilde stratum; anything else is projected to C1 U {0} within d_H <= r.
Decomposition decompose_element(const Point1DSet& c, double r);

/// U_i = absorb_union(sparse = v_i, dense = w_tilde_i, r) classwise, with
/// R = w_tilde.bound. Throws ClassCountMismatch or HypothesisViolated.
CoverFamily combine_covers(const SampledSpace& s, const CoverFamily& w_tilde,
                           const CoverFamily& v, double r);

struct CoverReport {
  std::vector<std::size_t> uncovered;
  std::vector<std::string> disjointness;
  std::vector<std::string> bound;
  std::vector<std::string> indices;

  std::size_t violation_count() const {
    return uncovered.size() + disjointness.size() + bound.size() + indices.size();
  }
  bool clean() const { return violation_count() == 0; }
};

/// Checks coverage, per-class r-disjointness (strict: distance > r) and
/// member diameter <= bound + kEps. Reports every violation found.
CoverReport verify_cover(const SampledSpace& s, const CoverFamily& c);

}  // namespace ghkit
