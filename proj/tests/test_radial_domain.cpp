#include <cmath>
#include <random>

#include "doctest.h"
#include "fockspec/error.hpp"
#include "fockspec/radial_domain.hpp"

using namespace fockspec;

TEST_CASE("normalize merges, drops and sorts") {
  CHECK(AnnulusUnion::normalize({{0, 1}, {0.5, 2}}).pieces() == std::vector<Interval>{{0, 2}});
  CHECK(AnnulusUnion::normalize({{1, 1}, {2, 3}}).pieces() == std::vector<Interval>{{2, 3}});
  CHECK(AnnulusUnion::normalize({{3, 4}, {0, 1}}).pieces() == std::vector<Interval>{{0, 1}, {3, 4}});
  CHECK(AnnulusUnion::normalize({{0, 1}, {1, 2}}).pieces() == std::vector<Interval>{{0, 2}});
}

TEST_CASE("normalize rejects degenerate and invalid input") {
  CHECK_THROWS_AS(AnnulusUnion::normalize({{1, 1}}), Error);
  CHECK_THROWS_AS(AnnulusUnion::normalize(std::vector<std::pair<double, double>>{}), Error);
  CHECK_THROWS_AS(AnnulusUnion::normalize({{2, 1}}), Error);
  CHECK_THROWS_AS(AnnulusUnion::normalize({{-1, 1}}), Error);
  try {
    AnnulusUnion::normalize({{0.5, 0.5}});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDegenerate);
  }
}

TEST_CASE("measure") {
  CHECK(AnnulusUnion::normalize({{0, 1}}).measure() == 1.0);
  CHECK(AnnulusUnion::normalize({{0.5819767, 1.5819767}}).measure() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(measure(AnnulusUnion::normalize({{0, 1}, {2, 2.5}})) == 1.5);
}

TEST_CASE("normalize is idempotent and matches a grid oracle") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 10.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::pair<double, double>> raw;
    const int n = 1 + trial % 5;
    for (int i = 0; i < n; ++i) {
      double a = u(rng), b = u(rng);
      if (a > b) std::swap(a, b);
      raw.emplace_back(a, b + 0.01);
    }
    const AnnulusUnion once = AnnulusUnion::normalize(raw);
    CHECK(AnnulusUnion::normalize(once.pieces()) == once);
    for (std::size_t i = 1; i < once.pieces().size(); ++i) CHECK(once.pieces()[i].a > once.pieces()[i - 1].b);
    // Brute-force: count grid cells covered by any raw interval.
    constexpr int cells = 200000;
    const double h = 10.02 / cells;
    int covered = 0;
    for (int c = 0; c < cells; ++c) {
      const double x = (c + 0.5) * h;
      for (auto [a, b] : raw)
        if (x >= a && x < b) {
          ++covered;
          break;
        }
    }
    CHECK(std::fabs(once.measure() - covered * h) <= 2.0 * n * h);
  }
}

TEST_CASE("symmetric difference") {
  const auto x = AnnulusUnion::normalize({{0, 2}});
  const auto y = AnnulusUnion::normalize({{1, 3}});
  CHECK(symmetric_difference(x, y) == doctest::Approx(2.0));
  CHECK(symmetric_difference(x, x) == 0.0);
}

TEST_CASE("random_radial_set contract") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const double s = 0.5 + static_cast<double>(seed % 7);
    const auto omega = random_radial_set(seed, s, 4, 50.0);
    CHECK(std::fabs(omega.measure() - s) <= 1e-12);
    CHECK(omega.pieces().size() <= 4);
    CHECK(omega.pieces().front().a >= 0.0);
    CHECK(omega.outer() <= 50.0 + 1e-12);
  }
  const auto one = random_radial_set(7, 2.0, 1, 50.0);
  REQUIRE(one.pieces().size() == 1);
  CHECK(one.pieces()[0].length() == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(random_radial_set(42, 1.0, 4, 50.0) == random_radial_set(42, 1.0, 4, 50.0));
  CHECK_THROWS_AS(random_radial_set(1, 50.0, 4, 50.0), Error);
  CHECK_THROWS_AS(random_radial_set(1, 1.0, 0, 50.0), Error);
}
