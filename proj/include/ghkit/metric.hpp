#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ghkit {

/// Absolute tolerance used by every axiom and equality check.
inline constexpr double kEps = 1e-9;

/// A finite set with an arbitrary real kernel, stored as a dense row-major
/// n x n matrix. No axioms are assumed.
class Network {
 public:
  Network(std::size_t n, std::vector<double> entries);
  Network(std::initializer_list<std::initializer_list<double>> rows);

  /// Throws InvalidInput unless `rows` is square, nonempty and finite.
  static Network from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
  std::span<const double> row(std::size_t i) const {
    return {d_.data() + i * n_, n_};
  }
  std::span<const double> entries() const { return d_; }

  /// Largest entry; 0 for a single point with zero self-distance.
  double diameter() const;

  /// Every entry multiplied by `t`.
  Network scaled(double t) const;

  friend bool operator==(const Network&, const Network&) = default;

 private:
  std::size_t n_;
  std::vector<double> d_;
};

/// A network satisfying (M1) and (M3): zero diagonal, nonnegative entries,
/// symmetric. Only constructible through validate_pseudo_semi_metric.
class PseudoSemiMetricNetwork {
 public:
  const Network& network() const { return net_; }
  std::size_t size() const { return net_.size(); }
  double operator()(std::size_t i, std::size_t j) const { return net_(i, j); }
  operator const Network&() const { return net_; }

  friend bool operator==(const PseudoSemiMetricNetwork&,
                         const PseudoSemiMetricNetwork&) = default;

 private:
  explicit PseudoSemiMetricNetwork(Network net) : net_(std::move(net)) {}
  friend PseudoSemiMetricNetwork validate_pseudo_semi_metric(Network);
  Network net_;
};

/// A network certified against (M1)-(M4). Only constructible through
/// validate_metric, so holding one is proof the axioms were checked.
class FiniteMetricSpace {
 public:
  const Network& network() const { return net_; }
  std::size_t size() const { return net_.size(); }
  double operator()(std::size_t i, std::size_t j) const { return net_(i, j); }
  double diameter() const { return net_.diameter(); }
  operator const Network&() const { return net_; }

  FiniteMetricSpace scaled(double t) const;

 private:
  explicit FiniteMetricSpace(Network net) : net_(std::move(net)) {}
  friend FiniteMetricSpace validate_metric(Network);
  Network net_;
};

/// A nonempty, strictly increasing finite set of reals.
class Point1DSet {
 public:
  /// Throws InvalidInput unless `points` is nonempty, finite and strictly
  /// increasing.
  explicit Point1DSet(std::vector<double> points);
  Point1DSet(std::initializer_list<double> points)
      : Point1DSet(std::vector<double>(points)) {}

  /// Sorts, then rejects duplicates.
  static Point1DSet from_unsorted(std::vector<double> points);

  std::span<const double> points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  double operator[](std::size_t i) const { return points_[i]; }
  double front() const { return points_.front(); }
  double back() const { return points_.back(); }
  double diameter() const { return points_.back() - points_.front(); }
  bool contains(double x) const;

  friend bool operator==(const Point1DSet&, const Point1DSet&) = default;
  friend auto operator<=>(const Point1DSet&, const Point1DSet&) = default;

 private:
  std::vector<double> points_;
};

/// Sorted, deduplicated set of the values a kernel takes.
class DistanceSet {
 public:
  explicit DistanceSet(Point1DSet values) : values_(std::move(values)) {}
  DistanceSet(std::initializer_list<double> values) : values_(values) {}

  const Point1DSet& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  bool contains(double x) const { return values_.contains(x); }

  friend bool operator==(const DistanceSet&, const DistanceSet&) = default;

 private:
  Point1DSet values_;
};

// Validation. The first violated axiom is reported as AxiomViolation with
// witness indices; entries are scanned row-major, M4 over (i, j, k).
FiniteMetricSpace validate_metric(Network m);
PseudoSemiMetricNetwork validate_pseudo_semi_metric(Network m);

/// d[i][j] = |p_i - p_j|.
FiniteMetricSpace from_point_set(const Point1DSet& p);

DistanceSet distance_set(const Network& m);

/// Kuratowski map: point i goes to row i of the matrix. Under the sup metric
/// the images are exactly isometric to the input, and every coordinate lies in
/// [0, ceil(diam)].
std::vector<std::vector<double>> kuratowski_embed(const FiniteMetricSpace& m);

/// Side length of the sup-metric cube certified to contain the Kuratowski
/// image.
double kuratowski_cube_side(const FiniteMetricSpace& m);

/// Nearest element of `target`, ties toward the smaller value. Zero maps to
/// zero.
double snap_to_target(double value, const DistanceSet& target);

/// Replaces every entry of `y` by its snapped value in `target`. Requires
/// 0 in target and d_H(distance_set(y), target) <= cap (+kEps); otherwise
/// throws PreconditionFailed. The identity correspondence between `y` and the
/// result has distortion at most cap.
PseudoSemiMetricNetwork quantize_network(const PseudoSemiMetricNetwork& y,
                                         const DistanceSet& target, double cap);

/// (n(n-1)/2 + 1)^(n(n-1)/2): the number of distinct outputs quantize_network
/// can produce for n-point inputs against a target of at most n(n-1)/2 + 1
/// values.
boost::multiprecision::cpp_int quantization_image_bound(unsigned n);

}  // namespace ghkit
