#include <doctest.h>

#include "ghkit/errors.hpp"
#include "ghkit/gromov_hausdorff.hpp"
#include "ghkit/hausdorff1d.hpp"
#include "ghkit/suites.hpp"
#include "support.hpp"

using namespace ghkit;

namespace {

const Network kTwoOne{{0, 1}, {1, 0}};
const Network kTwoTwo{{0, 2}, {2, 0}};
const Network kOne{{0}};

FiniteMetricSpace metric(const Network& n) { return validate_metric(n); }

}  // namespace

TEST_CASE("correspondence totality") {
  CHECK_NOTHROW(Correspondence(2, 1, {{0, 0}, {1, 0}}));
  CHECK_THROWS_AS(Correspondence(2, 1, {{0, 0}}), InvalidCorrespondence);
  CHECK_THROWS_AS(Correspondence(1, 2, {{0, 0}}), InvalidCorrespondence);
  CHECK_THROWS_AS(Correspondence(1, 1, {{0, 3}}), InvalidCorrespondence);
  const Correspondence c(2, 2, {{1, 1}, {0, 0}, {1, 1}});
  CHECK(c.pairs() == std::vector<Correspondence::Pair>{{0, 0}, {1, 1}});
}

TEST_CASE("distortion examples") {
  const auto space = from_point_set({0, 1, 3});
  CHECK(distortion(Correspondence::identity(3), space, space) == 0);
  CHECK(distortion(Correspondence::identity(2), kTwoOne, kTwoTwo) == 1);
  CHECK(distortion(Correspondence::full(2, 1), kTwoOne, kOne) == 1);
  CHECK_THROWS_AS(distortion(Correspondence::identity(2), kTwoOne, kOne), InvalidCorrespondence);
}

TEST_CASE("gh_exact examples") {
  const auto x = from_point_set({0, 1, 3});
  const auto self = gh_exact(x, x);
  CHECK(self.value == 0);
  CHECK(self.witness == Correspondence::identity(3));

  CHECK(gh_exact(x, metric(kOne)).value == 1.5);
  CHECK(gh_exact(metric(kTwoOne), metric(kTwoTwo)).value == 0.5);
}

TEST_CASE("gh_bruteforce examples") {
  CHECK(gh_bruteforce(kOne, kOne).value == 0);
  CHECK(gh_bruteforce(kTwoOne, kTwoTwo).value == 0.5);
  CHECK(gh_bruteforce(kTwoOne, kOne).value == 0.5);
  const Network four = from_point_set({0, 1, 2, 3});
  CHECK_THROWS_AS(gh_bruteforce(four, kOne), SizeGuardExceeded);
}

TEST_CASE("network_distance examples") {
  const Network odd{{0, 3, -1}, {2, 1, 0}, {0.5, 0, 0}};
  CHECK(network_distance(odd, odd).value == 0);
  CHECK(network_distance(Network{{0, 5}, {5, 0}}, kTwoOne).value == 2);

  const auto y = validate_pseudo_semi_metric(Network{{0, 1, 2.2}, {1, 0, 0.9}, {2.2, 0.9, 0}});
  const auto q = quantize_network(y, DistanceSet{0, 1, 2}, 0.25);
  CHECK(network_distance(y, q).value <= 0.25 + kEps);
}

TEST_CASE("lower bound examples") {
  CHECK(lower_bound_distance_set(kTwoOne, kTwoOne) == 0);
  CHECK(lower_bound_distance_set(from_point_set({0, 1}), from_point_set({0, 2})) == 0.5);
  CHECK(lower_bound_distance_set(from_point_set({0, 1, 3}), from_point_set({0, 1})) == 1);

  CHECK(lower_bound_diameter(from_point_set({0, 1, 3}), from_point_set({0, 3})) == 0);
  CHECK(lower_bound_diameter(from_point_set({0, 10}), from_point_set({0, 2})) == 4);
  CHECK(lower_bound_diameter(from_point_set({0, 1, 3}), kOne) == 1.5);
}

TEST_CASE("size guard") {
  const auto nine = from_point_set({0, 1, 2, 3, 4, 5, 6, 7, 8});
  const auto two = from_point_set({0, 1});
  CHECK_THROWS_AS(gh_exact(nine, two), SizeGuardExceeded);
  CHECK(gh_exact(nine, two, SearchOptions{9}).value == 3.5);
}

TEST_CASE("gh_exact equals gh_bruteforce on small spaces") {
  for (std::uint64_t t = 0; t < 300; ++t) {
    auto g = rng_stream(31, t);
    const std::size_t n = static_cast<std::size_t>(uniform_int(g, 1, 3));
    const std::size_t m = static_cast<std::size_t>(uniform_int(g, 1, 3));
    const auto x = test::random_metric(g, n);
    const auto y = test::random_metric(g, m);
    const auto exact = gh_exact(x, y);
    const auto brute = gh_bruteforce(x, y);
    CHECK(std::abs(exact.value - brute.value) <= kEps);
    CHECK(std::abs(distortion(exact.witness, x, y) / 2 - exact.value) <= kEps);
  }
}

TEST_CASE("network_distance equals gh_bruteforce on arbitrary networks") {
  for (std::uint64_t t = 0; t < 200; ++t) {
    auto g = rng_stream(32, t);
    const auto x = test::random_network(g, static_cast<std::size_t>(uniform_int(g, 1, 3)));
    const auto y = test::random_network(g, static_cast<std::size_t>(uniform_int(g, 1, 3)));
    CHECK(std::abs(network_distance(x, y).value - gh_bruteforce(x, y).value) <= kEps);
  }
}

TEST_CASE("gh_exact equals exhaustive map-pair enumeration up to 4 points") {
  for (std::uint64_t t = 0; t < 40; ++t) {
    auto g = rng_stream(33, t);
    const auto x = test::random_metric(g, static_cast<std::size_t>(uniform_int(g, 2, 4)));
    const auto y = test::random_metric(g, static_cast<std::size_t>(uniform_int(g, 2, 4)));
    CHECK(std::abs(gh_exact(x, y).value - test::gh_all_map_pairs(x, y)) <= kEps);
  }
}

TEST_CASE("metric properties and bounds of gh_exact") {
  for (std::uint64_t t = 0; t < 100; ++t) {
    auto g = rng_stream(34, t);
    const auto x = test::random_metric(g, static_cast<std::size_t>(uniform_int(g, 1, 5)));
    const auto y = test::random_metric(g, static_cast<std::size_t>(uniform_int(g, 1, 5)));
    const auto z = test::random_metric(g, static_cast<std::size_t>(uniform_int(g, 1, 5)));
    const auto xy = gh_exact(x, y);
    const double yz = gh_exact(y, z).value;
    const double xz = gh_exact(x, z).value;

    CHECK(gh_exact(x, x).value == 0);
    CHECK(std::abs(xy.value - gh_exact(y, x).value) <= kEps);
    CHECK(xz <= xy.value + yz + kEps);
    CHECK(xy.lower_bounds.distance_set <= xy.value + kEps);
    CHECK(xy.lower_bounds.diameter <= xy.value + kEps);
    CHECK(xy.value <= std::max(x.diameter(), y.diameter()) / 2 + kEps);
    CHECK(std::abs(distortion(xy.witness, x, y) / 2 - xy.value) <= kEps);

    for (double s : {2.0, 0.5, 3.0}) {
      CHECK(std::abs(gh_exact(x.scaled(s), y.scaled(s)).value - s * xy.value) <= kEps);
    }
  }
}

TEST_CASE("sandwich between 4/5 eh and eh for subsets of the line") {
  for (std::uint64_t t = 0; t < 200; ++t) {
    auto g = rng_stream(35, t);
    const auto x = random_point_set(g, 6);
    const auto y = random_point_set(g, 6);
    const double gh = gh_exact(from_point_set(x), from_point_set(y)).value;
    const double eh = eh_distance(x, y).value;
    CHECK(0.8 * eh - kEps <= gh);
    CHECK(gh <= eh + kEps);
  }
}

TEST_CASE("witness is deterministic") {
  auto g = rng_stream(36, 0);
  const auto x = test::random_metric(g, 5);
  const auto y = test::random_metric(g, 4);
  CHECK(gh_exact(x, y).witness == gh_exact(x, y).witness);
}

TEST_CASE("bilipschitz suite sees gh strictly below eh") {
  const BilipschitzReport rep = verify_bilipschitz(3000, 6, 1, kEps);
  CHECK(rep.clean());
  CHECK(rep.min_ratio >= 0.8 - kEps);
  CHECK(rep.min_ratio < 0.99);
  CHECK(rep.max_ratio <= 1 + kEps);
}
