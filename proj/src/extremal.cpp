#include "fockspec/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "fockspec/error.hpp"
#include "fockspec/radial_spectrum.hpp"
#include "fockspec/specfun.hpp"

namespace fockspec {

CheckReport make_report(std::string name, double lhs, double rhs, bool equality) {
  CheckReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = rhs - lhs;
  r.satisfied = lhs <= rhs + kSatisfySlack;
  r.equality_case_detected = equality;
  return r;
}

AnnulusUnion optimal_annulus(double s) {
  if (!(s > 0.0) || !std::isfinite(s)) fail(ErrorCode::kDomain, "optimal_annulus: s must be positive");
  const double a = s / std::expm1(s);
  const double b = s / -std::expm1(-s);
  return AnnulusUnion::normalize(std::vector<Interval>{{a, b}});
}

double lambda2_bound(double s) {
  if (!(s > 0.0) || !std::isfinite(s)) fail(ErrorCode::kDomain, "lambda2_bound: s must be positive");
  return std::exp(-s / std::expm1(s)) * -std::expm1(-s);
}

CheckReport check_krahn_szego(const AnnulusUnion& omega) {
  const double s = omega.measure();
  const Spectrum spec = spectrum_top(omega, 2);
  const double lambda2 = spec.entries.size() >= 2 ? spec.entries[1].lambda : 0.0;
  const bool equal = symmetric_difference(omega, optimal_annulus(s)) < kEqualitySymDiff;
  return make_report("krahn_szego", lambda2, lambda2_bound(s), equal);
}

CheckReport check_sum_topk(const AnnulusUnion& omega, int K) {
  const double s = omega.measure();
  const bool equal = symmetric_difference(omega, AnnulusUnion::ball(s)) < kEqualitySymDiff;
  return make_report("sum_top_" + std::to_string(K), sum_top(omega, K), specfun::g_K(K, s), equal);
}

CheckReport weighted_sum_comparison(const AnnulusUnion& omega, std::span<const double> weights) {
  const double s = omega.measure();
  const AnnulusUnion ball = AnnulusUnion::ball(s);
  const bool equal = symmetric_difference(omega, ball) < kEqualitySymDiff;
  return make_report("weighted_sum", weighted_sum(omega, weights), weighted_sum(ball, weights), equal);
}

CheckReport check_weighted_sum(const AnnulusUnion& omega, std::span<const double> weights) {
  if (weights.empty()) fail(ErrorCode::kPrecondition, "weighted sum: no weights");
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!(weights[i] > 0.0)) fail(ErrorCode::kPrecondition, "weighted sum: weights must be positive");
    if (i > 0 && weights[i] > weights[i - 1])
      fail(ErrorCode::kPrecondition,
           "weighted sum: weights must be nonincreasing (weight " + std::to_string(i + 1) + ")");
  }
  return weighted_sum_comparison(omega, weights);
}

AnnulusUnion weight_counterexample_annulus(double s) {
  if (!(s > 0.0)) fail(ErrorCode::kDomain, "counterexample annulus: s must be positive");
  return AnnulusUnion::normalize(std::vector<Interval>{{4.0 * s, 5.0 * s}});
}

namespace {

void check_sequence(std::span<const double> v, const char* label) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!(v[i] > 0.0) || !std::isfinite(v[i]))
      fail(ErrorCode::kPrecondition, std::string("karamata: ") + label + " entries must be positive");
    if (i > 0 && v[i] > v[i - 1])
      fail(ErrorCode::kPrecondition, std::string("karamata: ") + label + " is not decreasing at index " +
                                         std::to_string(i));
  }
}

}  // namespace

CheckReport karamata_check(std::span<const double> x, std::span<const double> y,
                           const std::function<double(double)>& phi) {
  check_sequence(x, "x");
  check_sequence(y, "y");
  const std::size_t n = std::max(x.size(), y.size());
  const auto at = [](std::span<const double> v, std::size_t i) { return i < v.size() ? v[i] : 0.0; };

  double sx = 0.0, sy = 0.0, total = 0.0;
  for (std::size_t i = 0; i < n; ++i) total += at(y, i);
  const double slack = 1e-12 * std::max(1.0, total);
  for (std::size_t i = 0; i < n; ++i) {
    sx += at(x, i);
    sy += at(y, i);
    if (sx > sy + slack) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "karamata: partial sum " << i + 1 << " of x (" << sx << ") exceeds that of y (" << sy << ")";
      fail(ErrorCode::kPrecondition, msg.str());
    }
  }
  if (std::fabs(sx - sy) > slack) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "karamata: totals differ (" << sx << " vs " << sy << ")";
    fail(ErrorCode::kPrecondition, msg.str());
  }

  double lhs = 0.0, rhs = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    lhs += phi(at(x, i));
    rhs += phi(at(y, i));
  }
  CheckReport r = make_report("karamata", lhs, rhs, false);
  r.equality_case_detected = std::fabs(r.margin) < 1e-12;
  return r;
}

double two_disk_lambda2_lower_bound(double s, double w) {
  if (!(s > 0.0)) fail(ErrorCode::kDomain, "two_disk_lambda2_lower_bound: s must be positive");
  const double pi = std::numbers::pi;
  const double r = std::sqrt(s / (2.0 * pi));
  if (!(w > r)) fail(ErrorCode::kOverlap, "two_disk_lambda2_lower_bound: disks overlap (w <= r)");
  // Numerator and denominator divided by e^{pi w^2}.
  const double num = -std::expm1(-s / 2.0) - 2.0 * pi * r * r * std::exp(-2.0 * pi * w * w + 2.0 * pi * w * r);
  const double den = 1.0 + std::exp(-2.0 * pi * w * w);
  return num / den;
}

}  // namespace fockspec
