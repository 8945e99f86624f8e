#include "ghkit/suites.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "ghkit/errors.hpp"
#include "ghkit/hausdorff1d.hpp"
#include "ghkit/rng.hpp"

namespace ghkit {

Point1DSet random_point_set(std::mt19937_64& g, std::size_t max_points) {
  if (max_points < 1) throw InvalidInput("max_points must be >= 1");
  const auto count = static_cast<std::size_t>(uniform_int(g, 1, static_cast<std::int64_t>(max_points)));
  for (;;) {
    std::vector<double> pts;
    for (std::size_t i = 0; i < count; ++i) pts.push_back(uniform01(g));
    std::sort(pts.begin(), pts.end());
    if (std::adjacent_find(pts.begin(), pts.end()) == pts.end()) return Point1DSet(std::move(pts));
  }
}

BilipschitzReport verify_bilipschitz(std::int64_t trials, std::size_t max_points,
                                     std::uint64_t seed, double tolerance,
                                     const SearchOptions& opts) {
  if (trials < 1) throw InvalidInput("trials must be >= 1");
  if (!(tolerance > 0)) throw InvalidInput("tolerance must be positive");
  if (max_points > opts.guard) throw SizeGuardExceeded(max_points, max_points, opts.guard);
  BilipschitzReport rep;
  rep.min_ratio = std::numeric_limits<double>::infinity();
  rep.max_ratio = -std::numeric_limits<double>::infinity();
  for (std::int64_t t = 0; t < trials; ++t) {
    auto g = rng_stream(seed, static_cast<std::uint64_t>(t));
    const Point1DSet x = random_point_set(g, max_points);
    const Point1DSet y = random_point_set(g, max_points);
    const GHResult gh = gh_exact(from_point_set(x), from_point_set(y), opts);
    const double eh = eh_distance(x, y).value;
    ++rep.trials;
    if (!(0.8 * eh - tolerance <= gh.value && gh.value <= eh + tolerance)) {
      ++rep.violations;
      std::ostringstream os;
      os.precision(17);
      os << "trial " << t << ": gh " << gh.value << " outside [0.8 eh, eh] with eh " << eh;
      rep.details.push_back(os.str());
    }
    if (gh.lower_bounds.distance_set > gh.value + tolerance) {
      ++rep.lower_bound_violations;
      rep.details.push_back("trial " + std::to_string(t) + ": distance-set bound exceeds gh");
    }
    if (eh > 0.0) {
      rep.min_ratio = std::min(rep.min_ratio, gh.value / eh);
      rep.max_ratio = std::max(rep.max_ratio, gh.value / eh);
    }
  }
  if (rep.min_ratio > rep.max_ratio) rep.min_ratio = rep.max_ratio = 0.0;
  return rep;
}

CoverReport x1_cover_suite(double r, double xmax, std::int64_t samples, std::uint64_t seed) {
  if (samples < 1) throw InvalidInput("samples must be >= 1");
  if (!(xmax > 0)) throw InvalidInput("xmax must be positive");
  std::vector<double> xs;
  for (std::int64_t i = 0; i < samples; ++i) {
    auto g = rng_stream(seed, static_cast<std::uint64_t>(i));
    xs.push_back(uniform01(g) * xmax);
  }
  const SampledSpace s = SampledSpace::from_line(xs);
  return verify_cover(s, x1_cover(s, r));
}

}  // namespace ghkit
