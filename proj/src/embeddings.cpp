#include "ghkit/embeddings.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "ghkit/errors.hpp"
#include "ghkit/hausdorff1d.hpp"
#include "ghkit/rng.hpp"

namespace ghkit {

std::int64_t pairing_T(std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 1) throw InvalidInput("pairing_T needs m, n >= 1");
  return m + (m + n - 2) * (m + n - 1) / 2;
}

BlockIndex pairing_T_inverse(std::int64_t k) {
  if (k < 1) throw InvalidInput("pairing_T_inverse needs k >= 1");
  // Anti-diagonal s = m + n - 1 holds T values (s-1)s/2 + 1 .. s(s+1)/2.
  auto s = static_cast<std::int64_t>((std::sqrt(8.0 * static_cast<double>(k) + 1.0) - 1.0) / 2.0);
  while (s * (s + 1) / 2 < k) ++s;
  while (s > 1 && (s - 1) * s / 2 >= k) --s;
  const std::int64_t m = k - (s - 1) * s / 2;
  return {m, s + 1 - m};
}

std::int64_t a_sequence(std::int64_t m, std::int64_t i) {
  if (m < 1 || i < 1) throw InvalidInput("a_sequence needs m, i >= 1");
  return 4 * m * (i - 1);
}

namespace {

// D indexed by T, filled in T order; entry 0 unused.
const std::array<std::int64_t, kMaxSeparationT + 1>& separation_table() {
  static const auto table = [] {
    std::array<std::int64_t, kMaxSeparationT + 1> d{};
    std::int64_t running_max = std::numeric_limits<std::int64_t>::min();
    for (std::int64_t t = 1; t <= kMaxSeparationT; ++t) {
      const BlockIndex b = pairing_T_inverse(t);
      std::int64_t value = 4 * b.m * (b.n + 2);
      if (t > 1) value = std::max(value, running_max + b.m + (std::int64_t{1} << t));
      d[static_cast<std::size_t>(t)] = value;
      running_max = std::max(running_max, value);
    }
    return d;
  }();
  return table;
}

}  // namespace

std::int64_t separation_constant(std::int64_t m, std::int64_t n) {
  const std::int64_t t = pairing_T(m, n);
  if (t > kMaxSeparationT) {
    throw OverflowGuard("separation_constant: T(" + std::to_string(m) + ", " +
                        std::to_string(n) + ") = " + std::to_string(t) + " exceeds " +
                        std::to_string(kMaxSeparationT));
  }
  return separation_table()[static_cast<std::size_t>(t)];
}

CubePoint::CubePoint(BlockIndex block, std::vector<double> coords)
    : block_(block), coords_(std::move(coords)) {
  if (block_.m < 1 || block_.n < 1) throw InvalidInput("block needs m, n >= 1");
  if (static_cast<std::int64_t>(coords_.size()) != block_.n) {
    throw InvalidInput("cube point needs exactly n = " + std::to_string(block_.n) +
                       " coordinates");
  }
  const auto side = static_cast<double>(block_.m);
  for (double c : coords_) {
    if (!(c >= 0.0 && c <= side)) {
      throw InvalidInput("cube coordinate outside [0, " + std::to_string(block_.m) + "]");
    }
  }
}

double sup_distance(const CubePoint& x, const CubePoint& y) {
  if (!(x.block() == y.block())) throw InvalidInput("sup_distance needs points of one block");
  double d = 0.0;
  for (std::size_t i = 0; i < x.coords().size(); ++i) {
    d = std::max(d, std::abs(x.coords()[i] - y.coords()[i]));
  }
  return d;
}

Point1DSet phi(const CubePoint& p) {
  const auto [m, n] = p.block();
  std::vector<double> pts;
  pts.reserve(static_cast<std::size_t>(n) + 1);
  for (std::int64_t i = 1; i <= n; ++i) {
    pts.push_back(static_cast<double>(a_sequence(m, i)) + p.coords()[static_cast<std::size_t>(i - 1)]);
  }
  pts.push_back(static_cast<double>(separation_constant(m, n)));
  return Point1DSet(std::move(pts));
}

namespace {

// Coordinates are multiples of 2^-20, so phi's points and their differences
// stay exact for every block within the overflow guard.
constexpr double kGrid = 0x1.0p-20;

CubePoint sample_point(BlockIndex b, std::mt19937_64& g) {
  std::vector<double> coords;
  const std::int64_t ticks = b.m * (std::int64_t{1} << 20);
  for (std::int64_t i = 0; i < b.n; ++i) {
    coords.push_back(static_cast<double>(uniform_int(g, 0, ticks)) * kGrid);
  }
  return CubePoint(b, std::move(coords));
}

std::string show(const CubePoint& p) {
  std::ostringstream os;
  os.precision(17);
  os << "(";
  for (std::size_t i = 0; i < p.coords().size(); ++i) os << (i ? ", " : "") << p.coords()[i];
  os << ")";
  return os.str();
}

void check_pair(const CubePoint& x, const CubePoint& y, double eps, ControlReport& rep) {
  const double d = sup_distance(x, y);
  const Point1DSet px = phi(x);
  const Point1DSet py = phi(y);
  const auto D = static_cast<double>(separation_constant(x.block()));
  const auto m = static_cast<double>(x.block().m);
  for (const Point1DSet* img : {&px, &py}) {
    if (img->diameter() < D - m || img->diameter() > D) ++rep.diameter_violations;
  }
  ++rep.pairs_checked;
  const double h = hausdorff(px, py);
  if (h != d) {
    ++rep.hausdorff_mismatches;
    rep.details.push_back("hausdorff " + std::to_string(h) + " != sup distance " +
                          std::to_string(d) + " for " + show(x) + " vs " + show(y));
  }
  const double eh = eh_distance(px, py).value;
  if (eh < d / 2.0 - eps || eh > d + eps) {
    ++rep.violations;
    rep.details.push_back("eh " + std::to_string(eh) + " outside [d/2, d] with d = " +
                          std::to_string(d) + " for " + show(x) + " vs " + show(y));
  }
  if (d > 0.0) {
    const double ratio = eh / d;
    rep.min_ratio = std::min(rep.min_ratio, ratio);
    rep.max_ratio = std::max(rep.max_ratio, ratio);
  }
}

}  // namespace

ControlReport verify_control_functions(BlockIndex block, std::int64_t trials,
                                       std::uint64_t seed, double eps) {
  if (trials < 1) throw InvalidInput("trials must be >= 1");
  separation_constant(block);  // guard
  ControlReport rep;
  rep.block = block;
  rep.min_ratio = std::numeric_limits<double>::infinity();
  rep.max_ratio = -std::numeric_limits<double>::infinity();
  for (std::int64_t t = 0; t < trials; ++t) {
    auto g = rng_stream(seed, static_cast<std::uint64_t>(t));
    const CubePoint x = sample_point(block, g);
    const CubePoint y = sample_point(block, g);
    check_pair(x, y, eps, rep);
  }
  if (block.n <= 4) {
    const std::int64_t corners = std::int64_t{1} << block.n;
    auto corner = [&](std::int64_t mask) {
      std::vector<double> c;
      for (std::int64_t i = 0; i < block.n; ++i) {
        c.push_back((mask >> i) & 1 ? static_cast<double>(block.m) : 0.0);
      }
      return CubePoint(block, std::move(c));
    };
    for (std::int64_t a = 0; a < corners; ++a) {
      for (std::int64_t b = a + 1; b < corners; ++b) check_pair(corner(a), corner(b), eps, rep);
    }
  }
  if (rep.min_ratio > rep.max_ratio) rep.min_ratio = rep.max_ratio = 0.0;
  return rep;
}

BlockSeparation block_separation_lower_bound(BlockIndex b1, BlockIndex b2) {
  if (b1 == b2) throw InvalidInput("block separation needs two distinct blocks");
  if (pairing_T(b1) < pairing_T(b2)) std::swap(b1, b2);
  BlockSeparation out;
  out.larger = b1;
  out.smaller = b2;
  out.twice_bound = separation_constant(b1) - separation_constant(b2) - b1.m;
  out.t_max = pairing_T(b1);
  return out;
}

}  // namespace ghkit
