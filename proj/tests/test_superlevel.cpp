#include <cmath>
#include <random>

#include "doctest.h"
#include "fockspec/error.hpp"
#include "fockspec/radial_domain.hpp"
#include "fockspec/specfun.hpp"
#include "fockspec/superlevel.hpp"

using namespace fockspec;

namespace {
// Integral of u_alpha over omega via incomplete gamma differences.
double integrate_u(const IndexVector& alpha, const AnnulusUnion& omega) {
  double total = 0.0;
  for (int k : alpha.indices())
    for (const auto& piece : omega.pieces()) total += specfun::gamma_mass(k, piece.a, piece.b);
  return total;
}

double integrate_poisson(int k, const AnnulusUnion& omega) {
  double total = 0.0;
  for (const auto& piece : omega.pieces()) total += specfun::gamma_mass(k, piece.a, piece.b);
  return total;
}

IndexVector random_alpha(std::mt19937_64& rng, int max_k, int max_entry) {
  std::uniform_int_distribution<int> len(1, max_k);
  std::vector<int> pool(static_cast<std::size_t>(max_entry + 1));
  for (int i = 0; i <= max_entry; ++i) pool[static_cast<std::size_t>(i)] = i;
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<int> pick(pool.begin(), pool.begin() + len(rng));
  std::sort(pick.begin(), pick.end());
  return IndexVector(pick);
}
}  // namespace

TEST_CASE("IndexVector validation") {
  CHECK_THROWS_AS(IndexVector({}), Error);
  CHECK_THROWS_AS(IndexVector({1, 1}), Error);
  CHECK_THROWS_AS(IndexVector({2, 1}), Error);
  CHECK_THROWS_AS(IndexVector({-1}), Error);
  CHECK(IndexVector({0, 1, 3}).leading_count() == 2);
  CHECK(IndexVector({1, 2}).leading_count() == 0);
  CHECK(IndexVector::leading(4).is_leading());
}

TEST_CASE("u_alpha values") {
  CHECK(u_alpha(IndexVector({0}), 0.0) == 1.0);
  CHECK(u_alpha(IndexVector({1}), 1.0) == doctest::Approx(0.36787944117144233).epsilon(1e-14));
  CHECK(u_alpha(IndexVector({0, 1}), 1.0) == doctest::Approx(0.7357588823428847).epsilon(1e-14));
  for (double s : {0.0, 0.5, 3.0, 20.0}) {
    double direct = 0.0;
    for (int k = 0; k < 4; ++k) direct += specfun::poisson_term(k, s);
    CHECK(u_alpha(IndexVector::leading(4), s) == doctest::Approx(direct).epsilon(1e-14));
  }
}

TEST_CASE("poisson_basis_roots") {
  // x^2/2 - 2 = 0 on (0, 5): root 2.
  const std::vector<double> c{-2.0, 0.0, 1.0};
  const auto roots = poisson_basis_roots(c, 0.0, 5.0);
  REQUIRE(roots.size() == 1);
  CHECK(roots[0] == doctest::Approx(2.0).epsilon(1e-13));
  // (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6 -> coefficients times j!.
  const std::vector<double> cubic{-6.0, 11.0, -12.0, 6.0};
  const auto r3 = poisson_basis_roots(cubic, 0.0, 10.0);
  REQUIRE(r3.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(r3[static_cast<std::size_t>(i)] == doctest::Approx(i + 1.0).epsilon(1e-12));
}

TEST_CASE("critical points") {
  CHECK(WeightProfile(IndexVector({0})).critical_points().empty());
  const WeightProfile one(IndexVector({1}));
  REQUIRE(one.critical_points().size() == 1);
  CHECK(one.critical_points()[0] == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(one.max_value() == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
  // u' = -e^{-s}((s-1)^2 + 1)/2 < 0, so (0, 2) is strictly decreasing.
  const WeightProfile zero_two(IndexVector({0, 2}));
  CHECK(zero_two.critical_points().empty());
  CHECK(zero_two.max_value() == doctest::Approx(1.0));
  CHECK(zero_two.superlevel_at(0.1).pieces().size() == 1);
}

TEST_CASE("superlevel_at") {
  const auto set = superlevel_at(IndexVector({1}), 0.3);
  REQUIRE(set.pieces().size() == 1);
  CHECK(set.pieces()[0].a == doctest::Approx(0.4894022271802150).epsilon(1e-12));
  CHECK(set.pieces()[0].b == doctest::Approx(1.7813370234216276).epsilon(1e-12));
  const auto ball = superlevel_at(IndexVector({0}), 0.25);
  REQUIRE(ball.pieces().size() == 1);
  CHECK(ball.pieces()[0].a == 0.0);
  CHECK(ball.pieces()[0].b == doctest::Approx(-std::log(0.25)).epsilon(1e-12));
  CHECK_THROWS_AS(superlevel_at(IndexVector({1}), std::exp(-1.0)), Error);
  CHECK_THROWS_AS(superlevel_at(IndexVector({1}), 0.0), Error);
  try {
    superlevel_at(IndexVector({1}), 0.5);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kEmptySet);
  }
}

TEST_CASE("superlevel_at with two components") {
  // (0, 4): u = e^{-s}(1 + s^4/24) has an interior local min and max.
  const WeightProfile p(IndexVector({0, 4}));
  REQUIRE(p.critical_points().size() == 2);
  const double lo = p(p.critical_points()[0]);
  const double hi = p(p.critical_points()[1]);
  REQUIRE(lo < hi);
  const auto set = p.superlevel_at(0.5 * (lo + hi));
  REQUIRE(set.pieces().size() == 2);
  CHECK(set.pieces()[0].a == 0.0);
}

TEST_CASE("superlevel boundary residuals and component count") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    const IndexVector alpha = random_alpha(rng, 5, 20);
    const WeightProfile p(alpha);
    for (double frac : {0.05, 0.3, 0.7, 0.95}) {
      const double t = frac * p.max_value();
      const auto set = p.superlevel_at(t);
      CHECK(static_cast<int>(set.pieces().size()) <= alpha.size());
      for (const auto& piece : set.pieces()) {
        if (piece.a > 0.0) CHECK(std::fabs(p(piece.a) - t) <= 1e-9);
        CHECK(std::fabs(p(piece.b) - t) <= 1e-9);
        CHECK(p(0.5 * (piece.a + piece.b)) > t);
      }
    }
  }
}

TEST_CASE("superlevel_of_measure examples") {
  const auto r0 = superlevel_of_measure(IndexVector({0}), 2.0);
  CHECK(r0.set.pieces()[0].b == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(r0.level_t == doctest::Approx(std::exp(-2.0)).epsilon(1e-9));

  const auto r1 = superlevel_of_measure(IndexVector({1}), 1.0);
  CHECK(std::fabs(r1.set.pieces()[0].a - 0.5819767068693264) <= 1e-9);
  CHECK(std::fabs(r1.set.pieces()[0].b - 1.5819767068693264) <= 1e-9);

  const auto r2 = superlevel_of_measure(IndexVector({2}), 1.0);
  CHECK(std::fabs(r2.set.pieces()[0].a - 1.5414940825367983) <= 1e-8);
  CHECK(std::fabs(r2.set.pieces()[0].b - 2.5414940825367983) <= 1e-8);
  CHECK(std::fabs(r2.achieved_measure - 1.0) <= 1e-10);
}

TEST_CASE("superlevel_of_measure matches the requested measure") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const IndexVector alpha = random_alpha(rng, 5, 20);
    for (double s : {0.01, 0.5, 3.0, 12.0}) {
      const auto r = superlevel_of_measure(alpha, s);
      CHECK(std::fabs(r.set.measure() - s) <= 1e-10);
      CHECK(std::fabs(r.achieved_measure - s) <= 1e-10);
    }
  }
  CHECK_THROWS_AS(superlevel_of_measure(IndexVector({0}), 0.0), Error);
}

TEST_CASE("bathtub_integral examples") {
  CHECK(bathtub_integral(IndexVector({0}), 1.0) == doctest::Approx(0.6321205588285577).epsilon(1e-11));
  CHECK(std::fabs(bathtub_integral(IndexVector({1}), 1.0) - 0.3532248) <= 1e-6);
  CHECK(std::fabs(bathtub_integral(IndexVector({0, 1}), 1.0) - 0.8963616764856730) <= 1e-10);
  CHECK(std::fabs(bathtub_integral(IndexVector({2}), 1.0) - 0.2651469649757498) <= 1e-9);
  CHECK(std::fabs(bathtub_integral(IndexVector({1, 2}), 1.0) - 0.5729447639259718) <= 1e-9);
}

TEST_CASE("bathtub dominance") {
  std::mt19937_64 rng(23);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const IndexVector alpha = random_alpha(rng, 4, 15);
    const double s = 0.2 + 0.05 * static_cast<double>(seed % 60);
    const auto omega = random_radial_set(seed, s, 5, 30.0);
    const auto best = superlevel_of_measure(alpha, s);
    const double bath = integrate_u(alpha, best.set);
    const double lhs = integrate_u(alpha, omega);
    CHECK(lhs <= bath + 1e-12);
    if (symmetric_difference(omega, best.set) > 1e-6) CHECK(lhs < bath);
  }
}

TEST_CASE("move") {
  CHECK(move(IndexVector({2, 3, 5})) == IndexVector({1, 2, 4}));
  CHECK(move(IndexVector({0, 1, 3})) == IndexVector({0, 1, 2}));
  CHECK(move(IndexVector({0, 2, 3})) == IndexVector({0, 1, 2}));
  CHECK_THROWS_AS(move(IndexVector::leading(3)), Error);
}

TEST_CASE("reduce_chain examples") {
  const auto chain = reduce_chain(IndexVector({1, 2}), 1.0);
  REQUIRE(chain.size() == 2);
  CHECK(chain.back().alpha == IndexVector({0, 1}));
  CHECK(std::fabs(chain[0].integral - 0.5729447639259718) <= 1e-9);
  CHECK(std::fabs(chain[1].integral - 0.8963616764856730) <= 1e-10);

  CHECK(reduce_chain(IndexVector::leading(3), 1.0).size() == 1);

  const auto down = reduce_chain(IndexVector({3}), 0.5);
  REQUIRE(down.size() == 4);
  for (std::size_t i = 1; i < down.size(); ++i) {
    CHECK(down[i].integral > down[i - 1].integral);
    CHECK(down[i].gain == doctest::Approx(down[i].integral - down[i - 1].integral).epsilon(1e-9));
  }
  CHECK(std::fabs(down.back().integral - 0.3934693402873666) <= 1e-10);
}

TEST_CASE("reduce_chain monotonicity on random inputs") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 80; ++trial) {
    const IndexVector alpha = random_alpha(rng, 5, 20);
    for (double s : {0.5, 1.0, 3.0}) {
      const auto chain = reduce_chain(alpha, s);
      CHECK(chain.front().alpha == alpha);
      CHECK(chain.back().alpha.is_leading());
      for (std::size_t i = 1; i < chain.size(); ++i) {
        CHECK(chain[i].integral >= chain[i - 1].integral - 1e-12);
        CHECK(chain[i].gain >= 0.0);
        CHECK(std::fabs(chain[i].gain - (chain[i].integral - chain[i - 1].integral)) <= 1e-10);
        if (chain[i - 1].leading > 0 || chain[i].alpha.is_leading()) CHECK(chain[i].gain > 0.0);
      }
      CHECK(std::fabs(chain.back().integral - specfun::g_K(alpha.size(), s)) <= 1e-9);
    }
  }
}

TEST_CASE("shift identity on superlevel sets of a single mode") {
  for (int k = 1; k <= 30; ++k) {
    const WeightProfile p(IndexVector({k}));
    for (int level = 1; level <= 20; ++level) {
      const auto set = p.superlevel_at(p.max_value() * level / 21.0);
      CHECK(std::fabs(integrate_poisson(k, set) - integrate_poisson(k - 1, set)) <= 1e-10);
    }
  }
}
