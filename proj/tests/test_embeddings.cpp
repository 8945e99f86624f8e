#include <doctest.h>

#include <map>

#include "ghkit/embeddings.hpp"
#include "ghkit/errors.hpp"
#include "ghkit/hausdorff1d.hpp"

using namespace ghkit;

namespace {

// D recomputed from its definition, scanning every block with smaller T by
// brute force over (m, n) instead of inverting the pairing.
std::int64_t d_oracle(std::int64_t m, std::int64_t n, std::map<std::pair<int, int>, std::int64_t>& memo) {
  const auto key = std::pair<int, int>(static_cast<int>(m), static_cast<int>(n));
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const std::int64_t t = m + (m + n - 2) * (m + n - 1) / 2;
  std::int64_t value = 4 * m * (n + 2);
  for (std::int64_t mm = 1; mm <= t; ++mm) {
    for (std::int64_t nn = 1; nn <= t; ++nn) {
      const std::int64_t tt = mm + (mm + nn - 2) * (mm + nn - 1) / 2;
      if (tt < t) value = std::max(value, d_oracle(mm, nn, memo) + m + (std::int64_t{1} << t));
    }
  }
  memo[key] = value;
  return value;
}

}  // namespace

TEST_CASE("pairing_T examples and bijection") {
  CHECK(pairing_T(1, 1) == 1);
  CHECK(pairing_T(1, 2) == 2);
  CHECK(pairing_T(2, 1) == 3);
  CHECK(pairing_T(1, 3) == 4);
  CHECK(pairing_T(2, 2) == 5);
  CHECK(pairing_T(3, 1) == 6);
  CHECK_THROWS_AS(pairing_T(0, 1), InvalidInput);

  for (std::int64_t k = 1; k <= 10000; ++k) {
    const BlockIndex b = pairing_T_inverse(k);
    REQUIRE(b.m >= 1);
    REQUIRE(b.n >= 1);
    REQUIRE(pairing_T(b) == k);
  }
  for (std::int64_t m = 1; m <= 60; ++m) {
    for (std::int64_t n = 1; n <= 60; ++n) REQUIRE(pairing_T_inverse(pairing_T(m, n)) == BlockIndex{m, n});
  }
}

TEST_CASE("a_sequence examples") {
  CHECK(a_sequence(1, 1) == 0);
  CHECK(a_sequence(1, 2) == 4);
  CHECK(a_sequence(2, 3) == 16);
  CHECK(a_sequence(3, 2) - a_sequence(3, 1) >= 4 * 3);
}

TEST_CASE("separation_constant values") {
  CHECK(separation_constant(1, 1) == 12);
  CHECK(separation_constant(1, 2) == 17);
  CHECK(separation_constant(2, 1) == 27);
  CHECK(separation_constant(1, 3) == 44);
  CHECK(separation_constant(2, 2) == 78);

  std::map<std::pair<int, int>, std::int64_t> memo;
  for (std::int64_t t = 1; t <= 20; ++t) {
    const BlockIndex b = pairing_T_inverse(t);
    CHECK(separation_constant(b) == d_oracle(b.m, b.n, memo));
    CHECK(separation_constant(b) >= 4 * b.m * (b.n + 2));
  }
  CHECK_NOTHROW(separation_constant(pairing_T_inverse(kMaxSeparationT)));
  CHECK_THROWS_AS(separation_constant(pairing_T_inverse(kMaxSeparationT + 1)), OverflowGuard);
}

TEST_CASE("phi examples") {
  CHECK(phi(CubePoint({1, 1}, {0})) == Point1DSet{0, 12});
  CHECK(phi(CubePoint({2, 2}, {0.5, 1.0})) == Point1DSet{0.5, 9.0, 78});
  CHECK(phi(CubePoint({1, 2}, {0, 0})) == Point1DSet{0, 4, 17});
  CHECK_THROWS_AS(CubePoint({1, 2}, {0}), InvalidInput);
  CHECK_THROWS_AS(CubePoint({1, 1}, {1.5}), InvalidInput);
  CHECK_THROWS_AS(CubePoint({1, 1}, {-0.1}), InvalidInput);
}

TEST_CASE("control function examples") {
  const CubePoint x({1, 1}, {0}), y({1, 1}, {1});
  CHECK(eh_distance(phi(x), phi(x)).value == 0);
  CHECK(sup_distance(x, y) == 1);
  const double e = eh_distance(phi(x), phi(y)).value;
  CHECK(e == 0.5);
  CHECK(e >= sup_distance(x, y) / 2);
  CHECK(e <= sup_distance(x, y));
  CHECK(hausdorff(phi(x), phi(y)) == 1);
}

TEST_CASE("verify_control_functions on small blocks") {
  for (BlockIndex b : {BlockIndex{1, 1}, BlockIndex{1, 2}, BlockIndex{2, 1}, BlockIndex{2, 2},
                       BlockIndex{1, 3}, BlockIndex{3, 2}}) {
    const ControlReport rep = verify_control_functions(b, 100, 7);
    CHECK(rep.clean());
    CHECK(rep.pairs_checked >= 100);
    CHECK(rep.min_ratio >= 0.5 - kEps);
    CHECK(rep.max_ratio <= 1.0 + kEps);
  }
}

TEST_CASE("block separation") {
  const auto s1 = block_separation_lower_bound({1, 1}, {1, 2});
  CHECK(s1.value() == 2);
  CHECK(s1.t_max == 2);
  CHECK(s1.certified());
  CHECK(block_separation_lower_bound({1, 2}, {1, 1}).value() == 2);

  const auto s2 = block_separation_lower_bound({1, 2}, {2, 1});
  CHECK(s2.value() == 4);
  CHECK(s2.larger == BlockIndex{2, 1});
  CHECK(s2.certified());

  CHECK_THROWS_AS(block_separation_lower_bound({2, 2}, {2, 2}), InvalidInput);

  for (std::int64_t t1 = 1; t1 <= 8; ++t1) {
    for (std::int64_t t2 = t1 + 1; t2 <= 8; ++t2) {
      const auto s = block_separation_lower_bound(pairing_T_inverse(t1), pairing_T_inverse(t2));
      CHECK(s.t_max == t2);
      CHECK(s.certified());
      CHECK(s.value() >= std::ldexp(1.0, static_cast<int>(t2) - 1));
    }
  }

  // Images from distinct blocks: eh is at least the diameter-gap bound.
  CHECK(eh_distance({0, 12}, {0, 4, 17}).value >= 2);
  for (std::int64_t t1 = 1; t1 <= 5; ++t1) {
    for (std::int64_t t2 = t1 + 1; t2 <= 5; ++t2) {
      const BlockIndex b1 = pairing_T_inverse(t1), b2 = pairing_T_inverse(t2);
      const CubePoint x(b1, std::vector<double>(static_cast<std::size_t>(b1.n), 0.0));
      const CubePoint y(b2, std::vector<double>(static_cast<std::size_t>(b2.n), static_cast<double>(b2.m)));
      CHECK(eh_distance(phi(x), phi(y)).value >= block_separation_lower_bound(b1, b2).value() - kEps);
    }
  }
}
