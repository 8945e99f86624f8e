#include "ghkit/hausdorff1d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>

#include "ghkit/errors.hpp"

namespace ghkit {

namespace {

// max over a in xs of min over b in ys of |a - (b + t)|, both sorted.
double directed(std::span<const double> xs, std::span<const double> ys, double t) {
  double worst = 0.0;
  std::size_t j = 0;
  for (double a : xs) {
    while (j + 1 < ys.size() && ys[j + 1] + t <= a) ++j;
    double best = std::abs(a - (ys[j] + t));
    if (j + 1 < ys.size()) best = std::min(best, std::abs(a - (ys[j + 1] + t)));
    worst = std::max(worst, best);
  }
  return worst;
}

// max over b of min over a of |(b + t) - a|.
double directed_back(std::span<const double> xs, std::span<const double> ys, double t) {
  double worst = 0.0;
  std::size_t i = 0;
  for (double b0 : ys) {
    const double b = b0 + t;
    while (i + 1 < xs.size() && xs[i + 1] <= b) ++i;
    double best = std::abs(b - xs[i]);
    if (i + 1 < xs.size()) best = std::min(best, std::abs(b - xs[i + 1]));
    worst = std::max(worst, best);
  }
  return worst;
}

double hausdorff_shifted(std::span<const double> xs, std::span<const double> ys, double t) {
  return std::max(directed(xs, ys, t), directed_back(xs, ys, t));
}

std::vector<double> reflected(std::span<const double> ys) {
  std::vector<double> out(ys.rbegin(), ys.rend());
  for (double& v : out) v = -v;
  return out;
}

void sort_unique(std::vector<double>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<double> shifts_for(std::span<const double> xs, std::span<const double> ys) {
  std::vector<double> diffs;
  diffs.reserve(xs.size() * ys.size());
  for (double a : xs) {
    for (double b : ys) diffs.push_back(a - b);
  }
  sort_unique(diffs);
  std::vector<double> out(diffs);
  out.reserve(diffs.size() * (diffs.size() + 1) / 2);
  for (std::size_t p = 0; p < diffs.size(); ++p) {
    for (std::size_t q = p + 1; q < diffs.size(); ++q) {
      out.push_back(0.5 * (diffs[p] + diffs[q]));
    }
  }
  sort_unique(out);
  return out;
}

}  // namespace

Point1DSet transform(const Point1DSet& y, bool reflect, double shift) {
  std::vector<double> out = reflect ? reflected(y.points())
                                    : std::vector<double>(y.points().begin(), y.points().end());
  for (double& v : out) v = v + shift;
  return Point1DSet(std::move(out));
}

double hausdorff(const Point1DSet& x, const Point1DSet& y) {
  return hausdorff_shifted(x.points(), y.points(), 0.0);
}

std::vector<double> candidate_shifts(const Point1DSet& x, const Point1DSet& y) {
  return shifts_for(x.points(), y.points());
}

Alignment eh_distance(const Point1DSet& x, const Point1DSet& y) {
  Alignment best{false, 0.0, std::numeric_limits<double>::infinity()};
  for (bool reflect : {false, true}) {
    const std::vector<double> ys = reflect ? reflected(y.points())
                                           : std::vector<double>(y.points().begin(), y.points().end());
    for (double t : shifts_for(x.points(), ys)) {
      const double v = hausdorff_shifted(x.points(), ys, t);
      if (v < best.value) best = Alignment{reflect, t, v};
    }
  }
  return best;
}

double eh_grid_oracle(const Point1DSet& x, const Point1DSet& y, double step) {
  if (!(step > 0)) throw InvalidInput("grid step must be positive");
  const double diam = std::max(x.diameter(), y.diameter());
  double best = std::numeric_limits<double>::infinity();
  for (bool reflect : {false, true}) {
    const std::vector<double> ys = reflect ? reflected(y.points())
                                           : std::vector<double>(y.points().begin(), y.points().end());
    const double lo = x.front() - ys.back() - diam;
    const double hi = x.back() - ys.front() + diam;
    const auto steps = static_cast<long long>(std::ceil((hi - lo) / step));
    for (long long k = 0; k <= steps; ++k) {
      best = std::min(best, hausdorff_shifted(x.points(), ys, lo + static_cast<double>(k) * step));
    }
  }
  return best;
}

}  // namespace ghkit
