#pragma once

// Test-only generators and brute-force oracles. Nothing here calls the code
// paths it is used to check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "ghkit/covers.hpp"
#include "ghkit/metric.hpp"
#include "ghkit/rng.hpp"

namespace ghkit::test {

/// Random metric on n points: shortest-path closure of random dyadic edge
/// weights in (0, 4]. Sums of these weights are exact in double precision, so
/// the triangle inequality holds exactly.
inline FiniteMetricSpace random_metric(std::mt19937_64& g, std::size_t n) {
  std::vector<double> d(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      d[i * n + j] = d[j * n + i] = static_cast<double>(uniform_int(g, 1, 64)) / 16.0;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        d[i * n + j] = std::min(d[i * n + j], d[i * n + k] + d[k * n + j]);
      }
    }
  }
  return validate_metric(Network(n, std::move(d)));
}

/// Random network with arbitrary entries in [-2, 2) (no axioms).
inline Network random_network(std::mt19937_64& g, std::size_t n) {
  std::vector<double> d(n * n);
  for (double& v : d) v = 4.0 * uniform01(g) - 2.0;
  return Network(n, std::move(d));
}

/// Random symmetric, zero-diagonal, nonnegative network.
inline PseudoSemiMetricNetwork random_pss(std::mt19937_64& g, std::size_t n, double hi) {
  std::vector<double> d(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) d[i * n + j] = d[j * n + i] = hi * uniform01(g);
  }
  return validate_pseudo_semi_metric(Network(n, std::move(d)));
}

/// Half the minimum distortion over every pair of maps (f: X -> Y, g: Y -> X),
/// enumerated exhaustively without pruning. Exponential; use for n, m <= 4.
inline double gh_all_map_pairs(const Network& x, const Network& y) {
  const std::size_t n = x.size(), m = y.size();
  std::vector<std::size_t> f(n, 0), g(m, 0);
  double best = std::numeric_limits<double>::infinity();
  auto bump = [](std::vector<std::size_t>& v, std::size_t base) {
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (++v[k] < base) return true;
      v[k] = 0;
    }
    return false;
  };
  do {
    do {
      std::vector<std::pair<std::size_t, std::size_t>> rel;
      for (std::size_t i = 0; i < n; ++i) rel.emplace_back(i, f[i]);
      for (std::size_t j = 0; j < m; ++j) rel.emplace_back(g[j], j);
      double dis = 0.0;
      for (const auto& [a, b] : rel) {
        for (const auto& [c, e] : rel) dis = std::max(dis, std::abs(x(a, c) - y(b, e)));
      }
      best = std::min(best, dis);
    } while (bump(g, n));
  } while (bump(f, m));
  return best / 2.0;
}

/// Hausdorff distance straight from the definition: infimum over every
/// correspondence R of max |a - b| over R. Exponential; |x| * |y| <= 16.
inline double hausdorff_by_correspondences(const std::vector<double>& x,
                                           const std::vector<double>& y) {
  const std::size_t n = x.size(), m = y.size();
  double best = std::numeric_limits<double>::infinity();
  for (std::uint32_t mask = 1; mask < (1u << (n * m)); ++mask) {
    std::uint32_t rows = 0, cols = 0;
    double worst = 0.0;
    for (std::size_t c = 0; c < n * m; ++c) {
      if (!(mask & (1u << c))) continue;
      rows |= 1u << (c / m);
      cols |= 1u << (c % m);
      worst = std::max(worst, std::abs(x[c / m] - y[c % m]));
    }
    if (rows == (1u << n) - 1 && cols == (1u << m) - 1) best = std::min(best, worst);
  }
  return best;
}

/// Classical sup-inf formula, O(|x| |y|).
inline double hausdorff_naive(const std::vector<double>& x, const std::vector<double>& y) {
  auto directed = [](const std::vector<double>& a, const std::vector<double>& b) {
    double worst = 0.0;
    for (double p : a) {
      double near = std::numeric_limits<double>::infinity();
      for (double q : b) near = std::min(near, std::abs(p - q));
      worst = std::max(worst, near);
    }
    return worst;
  };
  return std::max(directed(x, y), directed(y, x));
}

/// Line sample with a dense and a sparse class that satisfy the absorb_union
/// hypotheses by construction: dense members are runs of length <= R spaced
/// more than r apart, sparse members are runs of length <= sparse_bound spaced
/// more than 5R apart.
struct AbsorbFixture {
  SampledSpace sample;
  CoverClass sparse, dense;
  double sparse_bound, dense_bound, r;
};

inline AbsorbFixture absorb_fixture(std::mt19937_64& g) {
  const double r = 0.25 + uniform01(g);
  const double big_r = r * (1.0 + 2.0 * uniform01(g));
  const double sparse_bound = 3.0 * uniform01(g);
  std::vector<double> xs;
  auto runs = [&](double len_max, double gap_min, std::size_t count) {
    CoverClass out;
    double at = 2.0 * uniform01(g);
    for (std::size_t k = 0; k < count; ++k) {
      const double len = len_max * uniform01(g);
      Member mem;
      const auto pts = static_cast<std::size_t>(uniform_int(g, 1, 4));
      for (std::size_t p = 0; p < pts; ++p) {
        mem.push_back(xs.size());
        xs.push_back(at + len * uniform01(g));
      }
      out.push_back(mem);
      at += len + gap_min * (1.0 + 0.01 + uniform01(g));
    }
    return out;
  };
  CoverClass dense = runs(big_r, r, static_cast<std::size_t>(uniform_int(g, 0, 12)));
  CoverClass sparse = runs(sparse_bound, 5.0 * big_r, static_cast<std::size_t>(uniform_int(g, 0, 4)));
  return {SampledSpace::from_line(xs), std::move(sparse), std::move(dense), sparse_bound, big_r, r};
}

}  // namespace ghkit::test
