#pragma once

#include <complex>
#include <vector>

#include "fockspec/extremal.hpp"

namespace fockspec {

using Complex = std::complex<double>;

struct Disk {
  Complex center;
  double radius = 0.0;
};

/// Finite union of pairwise disjoint disks.
class DiskUnion {
 public:
  explicit DiskUnion(std::vector<Disk> disks);

  const std::vector<Disk>& disks() const { return disks_; }
  double area() const;
  /// max |center| + radius
  double reach() const;

 private:
  std::vector<Disk> disks_;
};

/// Dense Hermitian matrix, row-major.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n) {}

  int size() const { return n_; }
  Complex& operator()(int j, int k) { return data_[static_cast<std::size_t>(j) * n_ + k]; }
  const Complex& operator()(int j, int k) const { return data_[static_cast<std::size_t>(j) * n_ + k]; }

  double trace() const;
  /// max |M(k,j) - conj(M(j,k))|
  double hermitian_defect() const;

 private:
  int n_;
  std::vector<Complex> data_;
};

/// e_k(z) e^{-pi|z|^2/2} = pi^{k/2} z^k / sqrt(k!) * e^{-pi|z|^2/2}.
Complex weighted_monomial(int k, Complex z);

/// Values of weighted_monomial(0..n-1, z) by the upward recurrence.
void weighted_monomials(Complex z, std::vector<Complex>& out);

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussLegendre gauss_legendre(int order);

/// Smallest truncation size that captures the monomial mass over the domain:
/// ceil(pi R^2 + 10 sqrt(pi) R + 16), R = reach().
int truncation_size(const DiskUnion& omega);

/// Default quadrature order for an N x N truncation.
int default_quad_order(int N);

/// Matrix <T_Omega e_j, e_k> for j, k < N by polar Gauss-Legendre x trapezoid
/// quadrature on each disk (quad_order radial nodes, 4 * quad_order angles).
HermitianMatrix toeplitz_matrix(const DiskUnion& omega, int N, int quad_order);

/// Eigenvalues in decreasing order, by cyclic complex Jacobi rotations.
/// Throws kConvergence if the off-diagonal mass does not vanish.
std::vector<double> hermitian_eigenvalues(HermitianMatrix m);

/// <K_a, K_b> from the first N Taylor coefficients of K_a(z) = e^{pi conj(a) z}.
Complex kernel_inner_product(Complex a, Complex b, int N);

struct SymmetryBreakingReport {
  CheckReport report;  // lhs = radial bound, rhs = lambda_2 of the two disks
  int N = 0;
  int quad_order = 0;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double lambda2_refined = 0.0;  // at N + 16
  bool truncation_stable = false;
  double analytic_lower_bound = 0.0;
  double limit_value = 0.0;  // 1 - e^{-s/2}
};

/// Two disks of area s/2 each, centred at +-w. Refuses (kPrecondition) when
/// 1 - e^{-s/2} does not exceed lambda2_bound(s).
SymmetryBreakingReport symmetry_breaking_experiment(double s, double w, int N, int quad_order = 0);

}  // namespace fockspec
