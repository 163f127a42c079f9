#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "fockspec/error.hpp"
#include "fockspec/extremal.hpp"
#include "fockspec/nonradial.hpp"
#include "fockspec/specfun.hpp"

using namespace fockspec;
using std::numbers::pi;

namespace {
Disk unit_area_disk(Complex center) { return Disk{center, std::sqrt(1.0 / pi)}; }
}  // namespace

TEST_CASE("DiskUnion validation") {
  CHECK_THROWS_AS(DiskUnion({{Complex(0, 0), 1.0}, {Complex(1.5, 0), 1.0}}), Error);
  CHECK_THROWS_AS(DiskUnion({{Complex(0, 0), 0.0}}), Error);
  CHECK_THROWS_AS(DiskUnion({}), Error);
  const DiskUnion two({{Complex(-2, 0), 0.5}, {Complex(2, 0), 0.5}});
  CHECK(two.area() == doctest::Approx(0.5 * pi));
  CHECK(two.reach() == doctest::Approx(2.5));
  try {
    DiskUnion({{Complex(0, 0), 1.0}, {Complex(1.0, 0), 1.0}});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kOverlap);
  }
}

TEST_CASE("weighted monomials") {
  CHECK(weighted_monomial(0, 0.0) == Complex(1.0, 0.0));
  const Complex z(std::sqrt(1.0 / pi), 0.0);
  CHECK(std::norm(weighted_monomial(1, z)) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
  const Complex far = std::polar(10.0, 0.3);
  const double s = pi * 100.0;
  CHECK(std::isfinite(std::abs(weighted_monomial(40, far))));
  CHECK(std::fabs(std::norm(weighted_monomial(40, far)) - specfun::poisson_term(40, s)) <= 1e-12);
  std::vector<Complex> all(300);
  weighted_monomials(far, all);
  for (int k : {0, 1, 40, 150, 299}) {
    const double expect = specfun::poisson_term(k, s);
    CHECK(std::fabs(std::norm(all[static_cast<std::size_t>(k)]) - expect) <= 1e-12 * std::max(1.0, expect));
    CHECK(std::abs(all[static_cast<std::size_t>(k)] - weighted_monomial(k, far)) <=
          1e-12 * std::max(1e-300, std::abs(all[static_cast<std::size_t>(k)])) + 1e-300);
  }
}

TEST_CASE("gauss_legendre") {
  for (int n : {1, 2, 5, 32, 100}) {
    const auto gl = gauss_legendre(n);
    double w = 0.0;
    for (double v : gl.weights) w += v;
    CHECK(w == doctest::Approx(2.0).epsilon(1e-14));
    // Exact for polynomials of degree 2n - 1.
    double m = 0.0;
    const int deg = 2 * n - 2;
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) m += gl.weights[i] * std::pow(gl.nodes[i], deg);
    CHECK(m == doctest::Approx(2.0 / (deg + 1)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(gauss_legendre(0), Error);
}

TEST_CASE("origin disk gives the radial diagonal") {
  const DiskUnion ball({unit_area_disk(0.0)});
  const auto m = toeplitz_matrix(ball, 4, 32);
  const double expect[] = {0.6321205588285577, 0.2642411176571154, 0.0803013970713942, 0.0189881568761538};
  for (int j = 0; j < 4; ++j) {
    CHECK(std::fabs(m(j, j).real() - expect[j]) <= 1e-8);
    for (int k = 0; k < 4; ++k)
      if (k != j) CHECK(std::abs(m(j, k)) < 1e-10);
  }
  CHECK(m.hermitian_defect() < 1e-15);
}

TEST_CASE("small disks give small entries") {
  const DiskUnion tiny({{Complex(0.3, 0.1), 1e-4}});
  const auto m = toeplitz_matrix(tiny, 8, 16);
  for (int j = 0; j < 8; ++j)
    for (int k = 0; k < 8; ++k) CHECK(std::abs(m(j, k)) < 1e-7);
}

TEST_CASE("toeplitz_matrix is deterministic under threading") {
  const DiskUnion two({{Complex(-1, 0.2), 0.3}, {Complex(1, -0.1), 0.4}});
  const auto a = toeplitz_matrix(two, 24, 32);
  const auto b = toeplitz_matrix(two, 24, 32);
  for (int j = 0; j < 24; ++j)
    for (int k = 0; k < 24; ++k) CHECK(a(j, k) == b(j, k));
  CHECK_THROWS_AS(toeplitz_matrix(two, 24, 8), Error);
}

TEST_CASE("hermitian_eigenvalues on small inputs") {
  HermitianMatrix d(3);
  d(0, 0) = 0.2;
  d(1, 1) = 0.9;
  d(2, 2) = 0.5;
  const auto ev = hermitian_eigenvalues(d);
  CHECK(ev == std::vector<double>{0.9, 0.5, 0.2});

  HermitianMatrix two(2);
  const double a = 0.7, b = 0.1;
  const Complex c(0.2, -0.3);
  two(0, 0) = a;
  two(1, 1) = b;
  two(0, 1) = c;
  two(1, 0) = std::conj(c);
  const auto e2 = hermitian_eigenvalues(two);
  const double mid = 0.5 * (a + b), rad = std::sqrt(0.25 * (a - b) * (a - b) + std::norm(c));
  CHECK(e2[0] == doctest::Approx(mid + rad).epsilon(1e-14));
  CHECK(e2[1] == doctest::Approx(mid - rad).epsilon(1e-14));
}

TEST_CASE("hermitian_eigenvalues against a reference solver") {
  std::mt19937_64 rng(99);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 16;
    HermitianMatrix m(n);
    Eigen::MatrixXcd ref(n, n);
    for (int j = 0; j < n; ++j)
      for (int k = j; k < n; ++k) {
        const Complex v = (j == k) ? Complex(g(rng), 0.0) : Complex(g(rng), g(rng));
        m(j, k) = v;
        m(k, j) = std::conj(v);
        ref(j, k) = v;
        ref(k, j) = std::conj(v);
      }
    const auto ev = hermitian_eigenvalues(m);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(ref);
    const auto& rv = solver.eigenvalues();
    for (int i = 0; i < n; ++i) CHECK(std::fabs(ev[static_cast<std::size_t>(i)] - rv(n - 1 - i)) <= 1e-9);
    double tr = 0.0;
    for (double v : ev) tr += v;
    CHECK(tr == doctest::Approx(m.trace()).epsilon(1e-12));
  }
}

TEST_CASE("truncation rule and trace") {
  const DiskUnion one({unit_area_disk(Complex(0.5, 0.5))});
  const int N = truncation_size(one);
  const double R = one.reach();
  CHECK(N == static_cast<int>(std::ceil(pi * R * R + 10.0 * std::sqrt(pi) * R + 16.0)));
  const auto m = toeplitz_matrix(one, N, default_quad_order(N));
  CHECK(std::fabs(m.trace() - 1.0) < 1e-4);
  for (double v : hermitian_eigenvalues(m)) {
    CHECK(v >= -1e-8);
    CHECK(v <= 1.0 + 1e-8);
  }
}

TEST_CASE("translation invariance") {
  const double ball[] = {0.6321205588285577, 0.2642411176571154, 0.0803013970713942, 0.0189881568761538};
  for (double w : {0.5, 1.0}) {
    const int N = 48 + static_cast<int>(std::ceil(8.0 * pi * w * w));
    const DiskUnion moved({unit_area_disk(std::polar(w, 0.7))});
    const auto ev = hermitian_eigenvalues(toeplitz_matrix(moved, N, default_quad_order(N)));
    for (int k = 0; k < 4; ++k) CHECK(std::fabs(ev[static_cast<std::size_t>(k)] - ball[k]) <= 1e-6);
  }
}

TEST_CASE("kernel inner products") {
  for (double w : {0.3, 1.0, 2.0}) {
    const Complex z = std::polar(w, 1.1);
    const double nrm = std::exp(pi * w * w);
    CHECK(std::abs(kernel_inner_product(z, z, 200) - nrm) <= 1e-10 * nrm);
    const Complex cross = kernel_inner_product(Complex(-w, 0.0), Complex(w, 0.0), 200);
    CHECK(std::abs(cross - std::exp(-pi * w * w)) <= 1e-10);
  }
}

TEST_CASE("symmetry breaking experiment contract") {
  CHECK_THROWS_AS(symmetry_breaking_experiment(10.0, 5.0, 32), Error);
  CHECK_THROWS_AS(symmetry_breaking_experiment(0.2, 0.1, 32), Error);
  const auto r = symmetry_breaking_experiment(0.2, 1.0, 40);
  CHECK(r.lambda2 <= r.lambda1);
  CHECK(r.lambda1 <= -std::expm1(-0.2) + 1e-8);
  CHECK(r.report.lhs == doctest::Approx(lambda2_bound(0.2)));
  CHECK(r.lambda2 >= r.analytic_lower_bound - 1e-6);
}
