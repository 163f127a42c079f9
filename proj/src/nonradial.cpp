#include "fockspec/nonradial.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "fockspec/error.hpp"
#include "fockspec/parallel.hpp"

namespace fockspec {

namespace {
constexpr double kPi = std::numbers::pi;
}

DiskUnion::DiskUnion(std::vector<Disk> disks) : disks_(std::move(disks)) {
  if (disks_.empty()) fail(ErrorCode::kDegenerate, "disk union is empty");
  for (const auto& d : disks_)
    if (!(d.radius > 0.0) || !std::isfinite(d.radius) || !std::isfinite(d.center.real()) ||
        !std::isfinite(d.center.imag()))
      fail(ErrorCode::kDomain, "disk radius must be positive and finite");
  for (std::size_t i = 0; i < disks_.size(); ++i)
    for (std::size_t j = i + 1; j < disks_.size(); ++j)
      if (std::abs(disks_[i].center - disks_[j].center) <= disks_[i].radius + disks_[j].radius)
        fail(ErrorCode::kOverlap, "disks " + std::to_string(i) + " and " + std::to_string(j) + " overlap");
}

double DiskUnion::area() const {
  double total = 0.0;
  for (const auto& d : disks_) total += kPi * d.radius * d.radius;
  return total;
}

double DiskUnion::reach() const {
  double r = 0.0;
  for (const auto& d : disks_) r = std::max(r, std::abs(d.center) + d.radius);
  return r;
}

double HermitianMatrix::trace() const {
  double t = 0.0;
  for (int j = 0; j < n_; ++j) t += (*this)(j, j).real();
  return t;
}

double HermitianMatrix::hermitian_defect() const {
  double worst = 0.0;
  for (int j = 0; j < n_; ++j)
    for (int k = j; k < n_; ++k) worst = std::max(worst, std::abs((*this)(k, j) - std::conj((*this)(j, k))));
  return worst;
}

void weighted_monomials(Complex z, std::vector<Complex>& out) {
  if (out.empty()) return;
  out[0] = std::exp(-kPi * std::norm(z) / 2.0);
  for (std::size_t k = 1; k < out.size(); ++k)
    out[k] = out[k - 1] * z * std::sqrt(kPi / static_cast<double>(k));
}

Complex weighted_monomial(int k, Complex z) {
  if (k < 0) fail(ErrorCode::kDomain, "weighted_monomial: negative index");
  std::vector<Complex> v(static_cast<std::size_t>(k) + 1);
  weighted_monomials(z, v);
  return v.back();
}

GaussLegendre gauss_legendre(int order) {
  if (order < 1) fail(ErrorCode::kDomain, "gauss_legendre: order must be positive");
  if (order == 1) return {{0.0}, {2.0}};
  GaussLegendre gl;
  gl.nodes.resize(static_cast<std::size_t>(order));
  gl.weights.resize(static_cast<std::size_t>(order));
  const int n = order;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-16) break;
    }
    // Recompute derivative at the converged node.
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    gl.nodes[static_cast<std::size_t>(i)] = -x;
    gl.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    gl.weights[static_cast<std::size_t>(i)] = w;
    gl.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  return gl;
}

int truncation_size(const DiskUnion& omega) {
  const double R = omega.reach();
  return static_cast<int>(std::ceil(kPi * R * R + 10.0 * std::sqrt(kPi) * R + 16.0));
}

int default_quad_order(int N) { return std::max(32, (N + 64) / 4); }

HermitianMatrix toeplitz_matrix(const DiskUnion& omega, int N, int quad_order) {
  if (N < 1) fail(ErrorCode::kDomain, "toeplitz_matrix: N must be positive");
  if (quad_order < 16) fail(ErrorCode::kDomain, "toeplitz_matrix: quad_order must be at least 16");

  struct Node {
    Complex z;
    double w;
  };
  const GaussLegendre gl = gauss_legendre(quad_order);
  const int angles = 4 * quad_order;
  std::vector<Node> nodes;
  nodes.reserve(omega.disks().size() * gl.nodes.size() * static_cast<std::size_t>(angles));
  for (const auto& d : omega.disks()) {
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
      const double rho = 0.5 * d.radius * (gl.nodes[i] + 1.0);
      const double wr = 0.5 * d.radius * gl.weights[i] * rho * (2.0 * kPi / angles);
      for (int m = 0; m < angles; ++m) {
        const double theta = 2.0 * kPi * m / angles;
        nodes.push_back({d.center + std::polar(rho, theta), wr});
      }
    }
  }

  // Fixed block partition; blocks are reduced in order so the result does
  // not depend on the thread count.
  const std::size_t blocks = std::min<std::size_t>(64, nodes.size());
  const std::size_t n = static_cast<std::size_t>(N);
  std::vector<std::vector<Complex>> partial(blocks, std::vector<Complex>(n * n));
  parallel_for(blocks, [&](std::size_t b) {
    auto& acc = partial[b];
    std::vector<Complex> phi(n);
    const std::size_t lo = nodes.size() * b / blocks;
    const std::size_t hi = nodes.size() * (b + 1) / blocks;
    for (std::size_t q = lo; q < hi; ++q) {
      weighted_monomials(nodes[q].z, phi);
      for (std::size_t j = 0; j < n; ++j) {
        const Complex wj = nodes[q].w * phi[j];
        Complex* row = &acc[j * n];
        for (std::size_t k = j; k < n; ++k) row[k] += wj * std::conj(phi[k]);
      }
    }
  });

  HermitianMatrix m(N);
  for (int j = 0; j < N; ++j) {
    for (int k = j; k < N; ++k) {
      Complex v{};
      for (const auto& acc : partial) v += acc[static_cast<std::size_t>(j) * n + static_cast<std::size_t>(k)];
      if (j == k) v = Complex(v.real(), 0.0);
      m(j, k) = v;
      m(k, j) = std::conj(v);
    }
  }
  return m;
}

std::vector<double> hermitian_eigenvalues(HermitianMatrix a) {
  const int n = a.size();
  const auto off_norm2 = [&] {
    double s = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        if (p != q) s += std::norm(a(p, q));
    return s;
  };
  double total = 0.0;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) total += std::norm(a(p, q));
  const double target = std::max(1e-28 * total, 1e-300);

  constexpr int kMaxSweeps = 100;
  int sweep = 0;
  for (; sweep < kMaxSweeps && off_norm2() > target; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double g = std::abs(apq);
        if (g == 0.0) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const Complex e = apq / g;
        const double theta = (aqq - app) / (2.0 * g);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex se = s * e;
        const Complex sec = s * std::conj(e);
        // A <- A U with U = diag(1, conj(e)) * [[c, s], [-s, c]] on (p, q).
        for (int r = 0; r < n; ++r) {
          const Complex arp = a(r, p);
          const Complex arq = a(r, q);
          a(r, p) = c * arp - sec * arq;
          a(r, q) = s * arp + c * std::conj(e) * arq;
        }
        // A <- U^H A
        for (int col = 0; col < n; ++col) {
          const Complex apc = a(p, col);
          const Complex aqc = a(q, col);
          a(p, col) = c * apc - se * aqc;
          a(q, col) = s * apc + c * e * aqc;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = app - t * g;
        a(q, q) = aqq + t * g;
      }
    }
  }
  if (off_norm2() > target)
    fail(ErrorCode::kConvergence, "hermitian_eigenvalues: no convergence after " +
                                      std::to_string(kMaxSweeps) + " sweeps");
  std::vector<double> eig(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) eig[static_cast<std::size_t>(p)] = a(p, p).real();
  std::sort(eig.begin(), eig.end(), std::greater<>());
  return eig;
}

Complex kernel_inner_product(Complex a, Complex b, int N) {
  if (N < 1) fail(ErrorCode::kDomain, "kernel_inner_product: N must be positive");
  // K_w = sum_k pi^{k/2} conj(w)^k / sqrt(k!) e_k.
  Complex ca = 1.0, cb = 1.0, sum = 1.0;
  for (int k = 1; k < N; ++k) {
    const double f = std::sqrt(kPi / k);
    ca *= std::conj(a) * f;
    cb *= std::conj(b) * f;
    sum += ca * std::conj(cb);
  }
  return sum;
}

SymmetryBreakingReport symmetry_breaking_experiment(double s, double w, int N, int quad_order) {
  if (!(s > 0.0)) fail(ErrorCode::kDomain, "symmetry_breaking: s must be positive");
  const double limit = -std::expm1(-s / 2.0);
  const double bound = lambda2_bound(s);
  if (!(limit > bound))
    fail(ErrorCode::kPrecondition, "symmetry_breaking: 1 - e^{-s/2} does not exceed the radial bound at this area");
  const double r = std::sqrt(s / (2.0 * kPi));
  if (!(w > r)) fail(ErrorCode::kOverlap, "symmetry_breaking: disks overlap (w <= r)");
  if (N < 2) fail(ErrorCode::kDomain, "symmetry_breaking: N must be at least 2");

  const DiskUnion omega({{Complex(w, 0.0), r}, {Complex(-w, 0.0), r}});
  const int order = quad_order > 0 ? quad_order : default_quad_order(N + 16);

  SymmetryBreakingReport out;
  out.N = N;
  out.quad_order = order;
  const auto eig = hermitian_eigenvalues(toeplitz_matrix(omega, N, order));
  const auto eig_refined = hermitian_eigenvalues(toeplitz_matrix(omega, N + 16, order));
  out.lambda1 = eig[0];
  out.lambda2 = eig[1];
  out.lambda2_refined = eig_refined[1];
  out.truncation_stable = std::fabs(out.lambda2 - out.lambda2_refined) < 1e-6;
  out.analytic_lower_bound = two_disk_lambda2_lower_bound(s, w);
  out.limit_value = limit;

  out.report = make_report("symmetry_breaking", bound, out.lambda2, false);
  out.report.satisfied = out.lambda2 > bound && out.lambda2 >= out.analytic_lower_bound - 1e-6 &&
                         out.truncation_stable;
  return out;
}

}  // namespace fockspec
