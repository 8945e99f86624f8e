#include "ghkit/metric.hpp"

#include <algorithm>
#include <cmath>

#include "ghkit/errors.hpp"
#include "ghkit/hausdorff1d.hpp"

namespace ghkit {

Network::Network(std::size_t n, std::vector<double> entries)
    : n_(n), d_(std::move(entries)) {
  if (n_ == 0) throw InvalidInput("network must have at least one point");
  if (d_.size() != n_ * n_) throw InvalidInput("network matrix is not n x n");
  for (double v : d_) {
    if (!std::isfinite(v)) throw InvalidInput("network matrix has a non-finite entry");
  }
}

Network::Network(std::initializer_list<std::initializer_list<double>> rows)
    : Network(from_rows(std::vector<std::vector<double>>(rows.begin(), rows.end()))) {}

Network Network::from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  std::vector<double> flat;
  flat.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw InvalidInput("network matrix is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return Network(n, std::move(flat));
}

double Network::diameter() const { return *std::max_element(d_.begin(), d_.end()); }

Network Network::scaled(double t) const {
  std::vector<double> out(d_);
  for (double& v : out) v *= t;
  return Network(n_, std::move(out));
}

FiniteMetricSpace FiniteMetricSpace::scaled(double t) const {
  if (!(t > 0)) throw InvalidInput("scale factor must be positive");
  return validate_metric(net_.scaled(t));
}

namespace {

// (M1) and (M3), plus (M2) when `strict`.
void check_entries(const Network& m, bool strict) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = m(i, j);
      if (i == j) {
        if (std::abs(v) > kEps) throw AxiomViolation(Axiom::M1, i, j);
        continue;
      }
      if (v < -kEps) throw AxiomViolation(Axiom::M1, i, j);
      if (strict && v <= kEps) throw AxiomViolation(Axiom::M2, i, j);
      if (std::abs(v - m(j, i)) > kEps) throw AxiomViolation(Axiom::M3, i, j);
    }
  }
}

}  // namespace

FiniteMetricSpace validate_metric(Network m) {
  check_entries(m, /*strict=*/true);
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (m(i, j) > m(i, k) + m(k, j) + kEps) throw AxiomViolation(Axiom::M4, i, j, k);
      }
    }
  }
  return FiniteMetricSpace(std::move(m));
}

PseudoSemiMetricNetwork validate_pseudo_semi_metric(Network m) {
  check_entries(m, /*strict=*/false);
  return PseudoSemiMetricNetwork(std::move(m));
}

Point1DSet::Point1DSet(std::vector<double> points) : points_(std::move(points)) {
  if (points_.empty()) throw InvalidInput("point set must be nonempty");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!std::isfinite(points_[i])) throw InvalidInput("point set has a non-finite value");
    if (i > 0 && !(points_[i - 1] < points_[i])) {
      throw InvalidInput("point set must be strictly increasing");
    }
  }
}

Point1DSet Point1DSet::from_unsorted(std::vector<double> points) {
  std::sort(points.begin(), points.end());
  if (std::adjacent_find(points.begin(), points.end()) != points.end()) {
    throw InvalidInput("point set has duplicate values");
  }
  return Point1DSet(std::move(points));
}

bool Point1DSet::contains(double x) const {
  return std::binary_search(points_.begin(), points_.end(), x);
}

FiniteMetricSpace from_point_set(const Point1DSet& p) {
  const std::size_t n = p.size();
  std::vector<double> d(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) d[i * n + j] = std::abs(p[i] - p[j]);
  }
  return validate_metric(Network(n, std::move(d)));
}

DistanceSet distance_set(const Network& m) {
  std::vector<double> v(m.entries().begin(), m.entries().end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return DistanceSet(Point1DSet(std::move(v)));
}

std::vector<std::vector<double>> kuratowski_embed(const FiniteMetricSpace& m) {
  std::vector<std::vector<double>> out;
  out.reserve(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    const auto row = m.network().row(i);
    out.emplace_back(row.begin(), row.end());
  }
  return out;
}

double kuratowski_cube_side(const FiniteMetricSpace& m) { return std::ceil(m.diameter()); }

double snap_to_target(double value, const DistanceSet& target) {
  if (value == 0.0 && target.contains(0.0)) return 0.0;
  const auto pts = target.values().points();
  const auto it = std::lower_bound(pts.begin(), pts.end(), value);
  if (it == pts.begin()) return *it;
  if (it == pts.end()) return pts.back();
  const double hi = *it;
  const double lo = *(it - 1);
  return (hi - value < value - lo) ? hi : lo;
}

PseudoSemiMetricNetwork quantize_network(const PseudoSemiMetricNetwork& y,
                                         const DistanceSet& target, double cap) {
  if (!target.contains(0.0)) throw PreconditionFailed("target distance set must contain 0");
  if (target.values().front() < 0.0) {
    throw PreconditionFailed("target distance set must be nonnegative");
  }
  const double gap = hausdorff(distance_set(y).values(), target.values());
  if (gap > cap + kEps) {
    throw PreconditionFailed("Hausdorff gap " + std::to_string(gap) +
                             " between distance sets exceeds cap " + std::to_string(cap));
  }
  const std::size_t n = y.size();
  std::vector<double> out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[i * n + j] = snap_to_target(y(i, j), target);
  }
  return validate_pseudo_semi_metric(Network(n, std::move(out)));
}

boost::multiprecision::cpp_int quantization_image_bound(unsigned n) {
  if (n == 0) throw InvalidInput("quantization_image_bound needs n >= 1");
  const unsigned pairs = n * (n - 1) / 2;
  return boost::multiprecision::pow(boost::multiprecision::cpp_int(pairs + 1), pairs);
}

}  // namespace ghkit
