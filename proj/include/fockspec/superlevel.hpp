#pragma once

#include <span>
#include <vector>

#include "fockspec/radial_domain.hpp"

namespace fockspec {

/// Strictly increasing nonnegative mode indices (k_1 < ... < k_K), K >= 1.
class IndexVector {
 public:
  explicit IndexVector(std::vector<int> indices);

  /// (0, 1, ..., K-1)
  static IndexVector leading(int K);

  const std::vector<int>& indices() const { return indices_; }
  int size() const { return static_cast<int>(indices_.size()); }
  int largest() const { return indices_.back(); }
  /// Number of leading entries with k_n = n - 1.
  int leading_count() const;
  bool is_leading() const { return leading_count() == size(); }

  bool operator==(const IndexVector&) const = default;

 private:
  std::vector<int> indices_;
};

/// Real roots in (lo, hi) of the polynomial sum_j coeffs[j] x^j / j!, isolated
/// through the derivative sequence (roots of p' split p into monotone pieces).
/// Roots of even multiplicity that do not change sign are not reported.
std::vector<double> poisson_basis_roots(std::span<const double> coeffs, double lo, double hi);

/// u_alpha(sigma) = sum_n e^{-sigma} sigma^{k_n} / k_n!, with its monotone
/// structure precomputed so level sets are cheap to query.
class WeightProfile {
 public:
  explicit WeightProfile(IndexVector alpha);

  const IndexVector& alpha() const { return alpha_; }
  double operator()(double sigma) const;
  /// Interior critical points in increasing order.
  const std::vector<double>& critical_points() const { return critical_; }
  double max_value() const { return max_value_; }

  /// {sigma : u_alpha(sigma) > t}.
  AnnulusUnion superlevel_at(double t) const;

 private:
  // Root of u - t on a monotone bracket [lo, hi] with sign change.
  double crossing(double t, double lo, double hi) const;

  IndexVector alpha_;
  std::vector<double> critical_;
  double max_value_ = 0.0;
};

struct LevelSetResult {
  double level_t = 0.0;
  AnnulusUnion set;
  double achieved_measure = 0.0;
};

double u_alpha(const IndexVector& alpha, double sigma);
AnnulusUnion superlevel_at(const IndexVector& alpha, double t);

/// The superlevel set of u_alpha whose measure is s (the level is unique
/// because the distribution function is continuous and strictly monotone).
LevelSetResult superlevel_of_measure(const WeightProfile& profile, double s);
LevelSetResult superlevel_of_measure(const IndexVector& alpha, double s);

/// int_E u_alpha over the measure-s superlevel set E: the largest value of
/// int_Omega u_alpha among radial Omega with |Omega| = s.
double bathtub_integral(const IndexVector& alpha, double s);

/// Index shift: keep the leading (0, ..., l-1) block and decrement the rest.
/// Throws kPrecondition when alpha is already (0, ..., K-1).
IndexVector move(const IndexVector& alpha);

struct ChainStep {
  IndexVector alpha;
  double level_t = 0.0;
  double integral = 0.0;
  /// leading_count() of alpha, i.e. the branch taken by the next move.
  int leading = 0;
  /// integral minus the previous step's integral, evaluated without
  /// cancellation so increments below double resolution stay visible.
  double gain = 0.0;
};

/// Iterates move() down to (0, ..., K-1), recording bathtub integrals.
std::vector<ChainStep> reduce_chain(const IndexVector& alpha, double s);

}  // namespace fockspec
