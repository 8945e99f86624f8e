#pragma once

#include <vector>

#include "ghkit/metric.hpp"

namespace ghkit {

/// An isometry of the line, x -> (reflect ? -x : x) + shift, together with
/// the Hausdorff distance it achieves.
struct Alignment {
  bool reflect = false;
  double shift = 0.0;
  double value = 0.0;
};

/// Image of `y` under x -> (reflect ? -x : x) + shift.
Point1DSet transform(const Point1DSet& y, bool reflect, double shift);

/// Classical two-sided Hausdorff distance, computed with a two-pointer sweep
/// over the sorted inputs in O(|x| + |y|).
double hausdorff(const Point1DSet& x, const Point1DSet& y);

/// Translations at which t -> hausdorff(x, y + t) can attain its minimum.
///
/// The function is continuous and piecewise linear with slopes +-1. Each
/// directed term min_b |a - b - t| is a lower envelope of the V-shapes
/// |t - (a - b)|, and the outer max is an upper envelope of those. Every kink
/// of the result is therefore either the apex of some V (a difference
/// x_i - y_j) or a crossing of two pieces +-(t - d1), +-(t - d2), which can
/// only happen at the midpoint (d1 + d2) / 2. A piecewise linear function
/// without flat pieces attains its minimum at a kink, so evaluating at the
/// differences and all pairwise midpoints is exact.
std::vector<double> candidate_shifts(const Point1DSet& x, const Point1DSet& y);

/// Exact Euclidean-Hausdorff distance on the line: minimizes
/// hausdorff(x, sigma(y) + t) over sigma in {id, reflection} and all candidate
/// shifts. Ties prefer no reflection, then the smaller shift.
Alignment eh_distance(const Point1DSet& x, const Point1DSet& y);

/// Brute-force check for eh_distance: samples shifts on a grid of spacing
/// `step` for both orientations. Because t -> d_H is 1-Lipschitz the result is
/// within step/2 of the true minimum (and never below it).
double eh_grid_oracle(const Point1DSet& x, const Point1DSet& y, double step);

}  // namespace ghkit
