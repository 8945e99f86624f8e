#include "ghkit/covers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "ghkit/errors.hpp"
#include "ghkit/hausdorff1d.hpp"

namespace ghkit {

SampledSpace::SampledSpace(std::vector<Point1DSet> elements) : elements_(std::move(elements)) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i].front() != 0.0) {
      throw InvalidInput("sample element " + std::to_string(i) +
                         " must contain 0 and no negative points");
    }
  }
  const std::size_t n = elements_.size();
  d_.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      d_[i * n + j] = d_[j * n + i] = hausdorff(elements_[i], elements_[j]);
    }
  }
}

SampledSpace SampledSpace::from_line(const std::vector<double>& xs) {
  std::vector<Point1DSet> elements;
  elements.reserve(xs.size());
  for (double x : xs) {
    if (x < 0.0) throw InvalidInput("line sample values must be nonnegative");
    elements.push_back(x == 0.0 ? Point1DSet{0.0} : Point1DSet{0.0, x});
  }
  return SampledSpace(std::move(elements));
}

double member_distance(const SampledSpace& s, const Member& a, const Member& b) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i : a) {
    for (std::size_t j : b) best = std::min(best, s.distance(i, j));
  }
  return best;
}

double member_diameter(const SampledSpace& s, const Member& a) {
  double worst = 0.0;
  for (std::size_t p = 0; p < a.size(); ++p) {
    for (std::size_t q = p + 1; q < a.size(); ++q) worst = std::max(worst, s.distance(a[p], a[q]));
  }
  return worst;
}

X1Assignment x1_cover_assign(double x, double r) {
  if (!(r > 0)) throw InvalidInput("x1 cover needs r > 0");
  if (!(x >= 0)) throw InvalidInput("x1 cover needs x >= 0");
  auto q = static_cast<std::int64_t>(std::floor(x / (2.0 * r)));
  while (q > 0 && 2.0 * r * static_cast<double>(q) > x) --q;
  while (2.0 * r * static_cast<double>(q + 1) <= x) ++q;
  return {static_cast<int>(q % 2), q / 2};
}

CoverFamily x1_cover(const SampledSpace& s, double r) {
  std::map<std::int64_t, Member> by_block[2];
  for (std::size_t e = 0; e < s.size(); ++e) {
    const Point1DSet& el = s.element(e);
    if (el.size() > 2) throw InvalidInput("x1 cover needs elements of the form {0, x}");
    const X1Assignment a = x1_cover_assign(el.back(), r);
    by_block[a.cls][a.block].push_back(e);
  }
  CoverFamily out{r, 2.0 * r, {}};
  for (const auto& blocks : by_block) {
    CoverClass cls;
    for (const auto& [k, member] : blocks) cls.push_back(member);
    out.classes.push_back(std::move(cls));
  }
  return out;
}

namespace {

std::string pair_detail(std::size_t a, std::size_t b, double d, const char* rel, double limit) {
  return "members " + std::to_string(a) + " and " + std::to_string(b) + " at distance " +
         std::to_string(d) + " " + rel + " " + std::to_string(limit);
}

void require_disjoint(const SampledSpace& s, const CoverClass& c, double radius,
                      const char* which) {
  for (std::size_t a = 0; a < c.size(); ++a) {
    for (std::size_t b = a + 1; b < c.size(); ++b) {
      const double d = member_distance(s, c[a], c[b]);
      if (!(d > radius)) throw HypothesisViolated(which, pair_detail(a, b, d, "<=", radius));
    }
  }
}

void require_bounded(const SampledSpace& s, const CoverClass& c, double bound,
                     const char* which) {
  for (std::size_t a = 0; a < c.size(); ++a) {
    const double d = member_diameter(s, c[a]);
    if (d > bound + kEps) {
      throw HypothesisViolated(which, "member " + std::to_string(a) + " has diameter " +
                                          std::to_string(d) + " > " + std::to_string(bound));
    }
  }
}

void check_indices(const SampledSpace& s, const CoverClass& c) {
  for (const Member& m : c) {
    for (std::size_t i : m) {
      if (i >= s.size()) throw InvalidInput("cover index " + std::to_string(i) + " out of range");
    }
  }
}

}  // namespace

AbsorbResult absorb_union(const SampledSpace& s, const CoverClass& sparse, double sparse_bound,
                          const CoverClass& dense, double dense_bound, double r) {
  if (!(r > 0)) throw InvalidInput("absorb_union needs r > 0");
  check_indices(s, sparse);
  check_indices(s, dense);
  const double big_r = std::max(dense_bound, r);
  require_disjoint(s, dense, r, "dense-disjoint");
  require_bounded(s, dense, dense_bound, "dense-bound");
  require_disjoint(s, sparse, 5.0 * big_r, "sparse-disjoint");
  require_bounded(s, sparse, sparse_bound, "sparse-bound");

  AbsorbResult out;
  out.bound = sparse_bound + 2.0 * (r + big_r);
  std::vector<bool> absorbed(dense.size(), false);
  for (const Member& u : sparse) {
    Member merged = u;
    for (std::size_t v = 0; v < dense.size(); ++v) {
      if (member_distance(s, u, dense[v]) <= r) {
        absorbed[v] = true;
        merged.insert(merged.end(), dense[v].begin(), dense[v].end());
      }
    }
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    out.members.push_back(std::move(merged));
  }
  for (std::size_t v = 0; v < dense.size(); ++v) {
    if (!absorbed[v]) out.members.push_back(dense[v]);
  }
  return out;
}

Decomposition decompose_element(const Point1DSet& c, double r) {
  if (!(r > 0)) throw InvalidInput("decompose_element needs r > 0");
  if (!c.contains(0.0)) throw InvalidInput("decompose_element needs an element containing 0");
  const auto pts = c.points();
  const bool near = std::any_of(pts.begin(), pts.end(),
                                [&](double x) { return x != 0.0 && std::abs(x) <= r; });
  Decomposition out;
  if (!near) {
    out.stratum = Stratum::Tilde;
    out.tilde_part = c;
    return out;
  }
  std::vector<double> projected{0.0};
  for (double x : pts) {
    if (std::abs(x) > r) projected.push_back(x);
  }
  out.stratum = Stratum::Near;
  out.near_part = Point1DSet::from_unsorted(std::move(projected));
  out.gap = hausdorff(c, *out.near_part);
  return out;
}

CoverFamily combine_covers(const SampledSpace& s, const CoverFamily& w_tilde,
                           const CoverFamily& v, double r) {
  if (w_tilde.classes.size() != v.classes.size()) {
    throw ClassCountMismatch("combine_covers: " + std::to_string(w_tilde.classes.size()) +
                             " vs " + std::to_string(v.classes.size()) + " classes");
  }
  CoverFamily out{r, std::max(w_tilde.bound, r), {}};
  for (std::size_t i = 0; i < v.classes.size(); ++i) {
    AbsorbResult res = absorb_union(s, v.classes[i], v.bound, w_tilde.classes[i], w_tilde.bound, r);
    if (!v.classes[i].empty()) out.bound = std::max(out.bound, res.bound);
    out.classes.push_back(std::move(res.members));
  }
  return out;
}

CoverReport verify_cover(const SampledSpace& s, const CoverFamily& c) {
  CoverReport rep;
  std::vector<bool> covered(s.size(), false);
  std::vector<CoverClass> clean(c.classes.size());
  for (std::size_t k = 0; k < c.classes.size(); ++k) {
    for (std::size_t a = 0; a < c.classes[k].size(); ++a) {
      Member valid;
      for (std::size_t i : c.classes[k][a]) {
        if (i >= s.size()) {
          rep.indices.push_back("class " + std::to_string(k) + " member " + std::to_string(a) +
                                " has index " + std::to_string(i) + " out of range");
        } else {
          covered[i] = true;
          valid.push_back(i);
        }
      }
      clean[k].push_back(std::move(valid));
    }
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!covered[i]) rep.uncovered.push_back(i);
  }
  for (std::size_t k = 0; k < clean.size(); ++k) {
    const CoverClass& cls = clean[k];
    for (std::size_t a = 0; a < cls.size(); ++a) {
      const double diam = member_diameter(s, cls[a]);
      if (diam > c.bound + kEps) {
        rep.bound.push_back("class " + std::to_string(k) + " member " + std::to_string(a) +
                            " has diameter " + std::to_string(diam) + " > " +
                            std::to_string(c.bound));
      }
      for (std::size_t b = a + 1; b < cls.size(); ++b) {
        const double d = member_distance(s, cls[a], cls[b]);
        if (!(d > c.r)) {
          rep.disjointness.push_back("class " + std::to_string(k) + ": " +
                                     pair_detail(a, b, d, "<=", c.r));
        }
      }
    }
  }
  return rep;
}

}  // namespace ghkit
