#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ghkit/covers.hpp"
#include "ghkit/gromov_hausdorff.hpp"
#include "ghkit/metric.hpp"

namespace ghkit {

// Seeded randomized suites shared by the CLI and the acceptance tests.

/// Between 1 and max_points distinct points drawn uniformly from [0, 1).
Point1DSet random_point_set(std::mt19937_64& g, std::size_t max_points);

struct BilipschitzReport {
  std::int64_t trials = 0;
  std::int64_t violations = 0;
  /// Trials where lower_bound_distance_set exceeded gh_exact.
  std::int64_t lower_bound_violations = 0;
  /// gh / eh over trials with eh > 0.
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  std::vector<std::string> details;

  bool clean() const { return violations == 0 && lower_bound_violations == 0; }
};

/// For each trial draws two random point sets, computes gh_exact on the
/// induced spaces and eh_distance, and checks
/// 0.8 eh - tol <= gh <= eh + tol together with the distance-set lower bound.
BilipschitzReport verify_bilipschitz(std::int64_t trials, std::size_t max_points,
                                     std::uint64_t seed, double tolerance,
                                     const SearchOptions& opts = {});

/// x1 cover of `samples` elements {0, x}, x uniform in [0, xmax), checked by
/// verify_cover.
CoverReport x1_cover_suite(double r, double xmax, std::int64_t samples, std::uint64_t seed);

}  // namespace ghkit
