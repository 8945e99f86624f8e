#include "ghkit/gromov_hausdorff.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ghkit/errors.hpp"
#include "ghkit/hausdorff1d.hpp"

namespace ghkit {

Correspondence::Correspondence(std::size_t n, std::size_t m, std::vector<Pair> pairs)
    : n_(n), m_(m), pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
  std::vector<bool> seen_x(n_, false), seen_y(m_, false);
  for (const auto& [i, j] : pairs_) {
    if (i >= n_ || j >= m_) throw InvalidCorrespondence("correspondence index out of range");
    seen_x[i] = true;
    seen_y[j] = true;
  }
  for (std::size_t i = 0; i < n_; ++i) {
    if (!seen_x[i]) {
      throw InvalidCorrespondence("source point " + std::to_string(i) + " is unrelated");
    }
  }
  for (std::size_t j = 0; j < m_; ++j) {
    if (!seen_y[j]) {
      throw InvalidCorrespondence("target point " + std::to_string(j) + " is unrelated");
    }
  }
}

Correspondence Correspondence::full(std::size_t n, std::size_t m) {
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) pairs.emplace_back(i, j);
  }
  return Correspondence(n, m, std::move(pairs));
}

Correspondence Correspondence::identity(std::size_t n) {
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < n; ++i) pairs.emplace_back(i, i);
  return Correspondence(n, n, std::move(pairs));
}

namespace {

double pair_cost(const Network& x, const Network& y, std::size_t i, std::size_t j,
                 std::size_t a, std::size_t b) {
  return std::max(std::abs(x(i, a) - y(j, b)), std::abs(x(a, i) - y(b, j)));
}

double distortion_of(const std::vector<Correspondence::Pair>& pairs, const Network& x,
                     const Network& y) {
  double worst = 0.0;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    for (std::size_t q = p; q < pairs.size(); ++q) {
      worst = std::max(worst, pair_cost(x, y, pairs[p].first, pairs[p].second,
                                        pairs[q].first, pairs[q].second));
    }
  }
  return worst;
}

double eccentricity(const Network& net, std::size_t i) {
  const auto row = net.row(i);
  return *std::max_element(row.begin(), row.end());
}

// One step of the search: a point of X (choosing its partner in Y) or a point
// of Y (choosing its partner in X).
struct SearchNode {
  bool in_x;
  std::size_t index;
};

// Branch and bound over map pairs (f: X -> Y, g: Y -> X). The relation
// graph(f) U graph(g)^T is a correspondence, and every correspondence contains
// one of these, so the minimum over map pairs is the global minimum.
//
// cost[i * m + j] holds the distortion that adding (i, j) would contribute
// against the pairs fixed so far. It yields both the exact partial distortion
// of a child and a forward-checking bound: every unassigned node must still
// pick some partner.
class MapPairSearch {
 public:
  MapPairSearch(const Network& x, const Network& y, double stop_at)
      : x_(x), y_(y), n_(x.size()), m_(y.size()), stop_at_(stop_at) {
    for (std::size_t i = 0; i < n_; ++i) order_.push_back({true, i});
    for (std::size_t j = 0; j < m_; ++j) order_.push_back({false, j});
    std::stable_sort(order_.begin(), order_.end(), [&](const SearchNode& a, const SearchNode& b) {
      return ecc(a) > ecc(b);
    });
    costs_.assign(order_.size() + 1, std::vector<double>(n_ * m_));
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < m_; ++j) costs_[0][i * m_ + j] = std::abs(x(i, i) - y(j, j));
    }
    choice_.assign(order_.size(), 0);
  }

  std::vector<Correspondence::Pair> run() {
    descend(0, 0.0);
    std::vector<Correspondence::Pair> pairs;
    for (std::size_t d = 0; d < order_.size(); ++d) pairs.push_back(pair_at(d, best_choice_[d]));
    return pairs;
  }

  double best() const { return best_; }

 private:
  double ecc(const SearchNode& s) const {
    return s.in_x ? eccentricity(x_, s.index) : eccentricity(y_, s.index);
  }

  Correspondence::Pair pair_at(std::size_t depth, std::size_t partner) const {
    const SearchNode& s = order_[depth];
    return s.in_x ? Correspondence::Pair{s.index, partner} : Correspondence::Pair{partner, s.index};
  }

  std::size_t partners(std::size_t depth) const { return order_[depth].in_x ? m_ : n_; }

  double forward_bound(std::size_t depth) const {
    const auto& cost = costs_[depth];
    double bound = 0.0;
    for (std::size_t d = depth; d < order_.size(); ++d) {
      double cheapest = std::numeric_limits<double>::infinity();
      for (std::size_t p = 0; p < partners(d); ++p) {
        const auto [i, j] = pair_at(d, p);
        cheapest = std::min(cheapest, cost[i * m_ + j]);
      }
      bound = std::max(bound, cheapest);
    }
    return bound;
  }

  void descend(std::size_t depth, double partial) {
    if (done_) return;
    if (depth == order_.size()) {
      best_ = partial;
      best_choice_ = choice_;
      if (best_ <= stop_at_) done_ = true;
      return;
    }
    const auto& cost = costs_[depth];
    auto& next = costs_[depth + 1];
    for (std::size_t p = 0; p < partners(depth) && !done_; ++p) {
      const auto [a, b] = pair_at(depth, p);
      const double child = std::max(partial, cost[a * m_ + b]);
      if (child >= best_) continue;
      for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < m_; ++j) {
          next[i * m_ + j] = std::max(cost[i * m_ + j], pair_cost(x_, y_, i, j, a, b));
        }
      }
      if (std::max(child, forward_bound(depth + 1)) >= best_) continue;
      choice_[depth] = p;
      descend(depth + 1, child);
    }
  }

  const Network& x_;
  const Network& y_;
  std::size_t n_, m_;
  double stop_at_;
  std::vector<SearchNode> order_;
  std::vector<std::vector<double>> costs_;
  std::vector<std::size_t> choice_;
  std::vector<std::size_t> best_choice_;
  double best_ = std::numeric_limits<double>::infinity();
  bool done_ = false;
};

}  // namespace

double distortion(const Correspondence& r, const Network& x, const Network& y) {
  if (r.source_size() != x.size() || r.target_size() != y.size()) {
    throw InvalidCorrespondence("correspondence sizes do not match the networks");
  }
  return distortion_of(r.pairs(), x, y);
}

double lower_bound_distance_set(const Network& x, const Network& y) {
  return hausdorff(distance_set(x).values(), distance_set(y).values()) / 2.0;
}

double lower_bound_diameter(const Network& x, const Network& y) {
  return std::abs(x.diameter() - y.diameter()) / 2.0;
}

LowerBounds lower_bounds(const Network& x, const Network& y) {
  return {lower_bound_distance_set(x, y), lower_bound_diameter(x, y)};
}

GHResult network_distance(const Network& x, const Network& y, const SearchOptions& opts) {
  if (x.size() > opts.guard || y.size() > opts.guard) {
    throw SizeGuardExceeded(x.size(), y.size(), opts.guard);
  }
  const LowerBounds lb = lower_bounds(x, y);
  MapPairSearch search(x, y, 2.0 * lb.best());
  auto pairs = search.run();
  return GHResult{search.best() / 2.0, Correspondence(x.size(), y.size(), std::move(pairs)), lb};
}

GHResult gh_exact(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                  const SearchOptions& opts) {
  return network_distance(x.network(), y.network(), opts);
}

GHResult gh_bruteforce(const Network& x, const Network& y, std::size_t max_points) {
  const std::size_t n = x.size(), m = y.size();
  if (n > max_points || m > max_points || n * m > 20) {
    throw SizeGuardExceeded(n, m, max_points);
  }
  const std::size_t cells = n * m;
  double best = std::numeric_limits<double>::infinity();
  std::vector<Correspondence::Pair> best_pairs;
  std::vector<Correspondence::Pair> pairs;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << cells); ++mask) {
    pairs.clear();
    std::uint32_t rows = 0, cols = 0;
    for (std::size_t c = 0; c < cells; ++c) {
      if (mask & (std::uint32_t{1} << c)) {
        pairs.emplace_back(c / m, c % m);
        rows |= std::uint32_t{1} << (c / m);
        cols |= std::uint32_t{1} << (c % m);
      }
    }
    if (rows != (std::uint32_t{1} << n) - 1 || cols != (std::uint32_t{1} << m) - 1) continue;
    const double d = distortion_of(pairs, x, y);
    if (d < best) {
      best = d;
      best_pairs = pairs;
    }
  }
  return GHResult{best / 2.0, Correspondence(n, m, std::move(best_pairs)), lower_bounds(x, y)};
}

}  // namespace ghkit
