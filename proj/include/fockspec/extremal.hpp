#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "fockspec/radial_domain.hpp"

namespace fockspec {

/// Outcome of one inequality check lhs <= rhs.
struct CheckReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  bool satisfied = false;
  double margin = 0.0;  // rhs - lhs
  bool equality_case_detected = false;
};

inline constexpr double kSatisfySlack = 1e-9;
inline constexpr double kEqualitySymDiff = 1e-6;

/// Builds a report with satisfied = lhs <= rhs + kSatisfySlack.
CheckReport make_report(std::string name, double lhs, double rhs, bool equality);

/// The annulus maximizing lambda_2 among radial sets of area s:
/// a = s / (e^s - 1), b = s e^s / (e^s - 1) in sigma-units.
AnnulusUnion optimal_annulus(double s);

/// lambda_2 of optimal_annulus(s): e^{s/(1-e^s)} (1 - e^{-s}).
double lambda2_bound(double s);

CheckReport check_krahn_szego(const AnnulusUnion& omega);
CheckReport check_sum_topk(const AnnulusUnion& omega, int K);

/// Weighted eigenvalue sum against the equal-area ball. Weights must be
/// positive and nonincreasing (kPrecondition otherwise).
CheckReport check_weighted_sum(const AnnulusUnion& omega, std::span<const double> weights);

/// Same comparison without the monotonicity requirement. With increasing
/// weights and the thin annulus {2r < |z| < sqrt(5) r} the inequality fails.
CheckReport weighted_sum_comparison(const AnnulusUnion& omega, std::span<const double> weights);

/// The annulus {2r < |z| < sqrt(5) r} of area s, i.e. sigma in (4s, 5s).
AnnulusUnion weight_counterexample_annulus(double s);

/// Karamata comparison sum phi(x_k) <= sum phi(y_k) for decreasing sequences
/// with x weakly majorized by y and equal totals. The shorter sequence is
/// padded with zeros, so phi must be defined at 0. Violated preconditions
/// throw kPrecondition naming the first failing partial sum.
CheckReport karamata_check(std::span<const double> x, std::span<const double> y,
                           const std::function<double(double)>& phi);

/// Closed-form lower bound for lambda_2 of two disks of total area s centred
/// at +-w, from the max-min principle on the span of the kernels e^{+-pi w z}.
double two_disk_lambda2_lower_bound(double s, double w);

}  // namespace fockspec
