#include "fockspec/radial_spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "fockspec/error.hpp"
#include "fockspec/specfun.hpp"

namespace fockspec {

double mode_mass(const AnnulusUnion& omega, int k) {
  double total = 0.0;
  for (const auto& iv : omega.pieces()) total += specfun::gamma_mass(k, iv.a, iv.b);
  return total;
}

double mode_envelope(const AnnulusUnion& omega, int k) {
  return specfun::reg_lower_gamma(k, omega.outer());
}

Spectrum spectrum_top(const AnnulusUnion& omega, int n, double tol) {
  if (n < 1) fail(ErrorCode::kDomain, "spectrum_top: n must be positive");
  if (!(tol > 0.0)) fail(ErrorCode::kDomain, "spectrum_top: tol must be positive");

  std::vector<Mode> found;
  // Min-heap of the n largest masses seen so far.
  std::priority_queue<double, std::vector<double>, std::greater<>> best;
  Spectrum out;
  for (int k = 0;; ++k) {
    const double env = mode_envelope(omega, k);
    const bool filled = static_cast<int>(best.size()) == n;
    if (filled && env < std::min(tol, best.top())) {
      out.tail_bound = env;
      break;
    }
    if (!filled && env < tol) {
      out.tail_bound = env;
      out.truncated = true;
      break;
    }
    const double lambda = mode_mass(omega, k);
    if (lambda > 0.0) {
      found.push_back({lambda, k});
      best.push(lambda);
      if (static_cast<int>(best.size()) > n) best.pop();
    }
  }

  std::sort(found.begin(), found.end(), [](const Mode& x, const Mode& y) {
    return x.lambda != y.lambda ? x.lambda > y.lambda : x.mode_index < y.mode_index;
  });
  if (static_cast<int>(found.size()) > n) found.resize(static_cast<std::size_t>(n));
  if (out.truncated) {
    std::erase_if(found, [&](const Mode& m) { return m.lambda < out.tail_bound; });
  }
  for (std::size_t r = 0; r + 1 < found.size(); ++r)
    if (found[r].lambda - found[r + 1].lambda < kTieGap) out.near_ties.push_back(static_cast<int>(r));
  out.entries = std::move(found);
  return out;
}

double sum_top(const AnnulusUnion& omega, int K) {
  const Spectrum spec = spectrum_top(omega, K);
  double sum = 0.0;
  for (const auto& m : spec.entries) sum += m.lambda;
  return sum;
}

double weighted_sum(const AnnulusUnion& omega, std::span<const double> weights) {
  if (weights.empty()) return 0.0;
  const Spectrum spec = spectrum_top(omega, static_cast<int>(weights.size()));
  double sum = 0.0;
  for (std::size_t i = 0; i < spec.entries.size(); ++i) sum += weights[i] * spec.entries[i].lambda;
  return sum;
}

std::vector<double> mode_masses(const AnnulusUnion& omega, double power, double tol) {
  if (!(power > 0.0)) fail(ErrorCode::kDomain, "mode_masses: power must be positive");
  if (!(tol > 0.0)) fail(ErrorCode::kDomain, "mode_masses: tol must be positive");
  // mode_envelope(k+1) <= outer/(k+2) * mode_envelope(k); once that ratio is
  // at most 1/2 the remaining envelope powers sum to <= env^power / (1 - 2^-power).
  const double outer = omega.outer();
  const double geometric = 1.0 / (1.0 - std::exp2(-power));
  std::vector<double> masses;
  for (int k = 0;; ++k) {
    if (outer / (k + 2.0) <= 0.5) {
      const double env = mode_envelope(omega, k);
      if (std::pow(env, power) * geometric <= tol) break;
    }
    masses.push_back(mode_mass(omega, k));
  }
  return masses;
}

double schatten(const AnnulusUnion& omega, double p, double tol) {
  if (!(p > 0.0)) fail(ErrorCode::kDomain, "schatten: p must be positive");
  if (p == 1.0) fail(ErrorCode::kDomain, "schatten: p = 1 is the trace, use trace_phi");
  double sum = 0.0;
  for (double m : mode_masses(omega, p, tol)) sum += std::pow(m, p);
  return std::pow(sum, 1.0 / p);
}

double trace_phi(const AnnulusUnion& omega, const std::function<double(double)>& phi,
                 PhiModulus modulus, double tol) {
  if (!(modulus.scale > 0.0) || !(modulus.power > 0.0))
    fail(ErrorCode::kDomain, "trace_phi: modulus must have positive scale and power");
  // Phi(0+) must vanish at the declared rate, otherwise the series diverges.
  for (double t : {1e-12, 1e-30, 1e-80}) {
    const double v = phi(t);
    if (!std::isfinite(v) || std::fabs(v) > modulus.scale * std::pow(t, modulus.power) * (1 + 1e-9))
      fail(ErrorCode::kPrecondition, "trace_phi: phi violates the declared modulus near 0");
  }
  double sum = 0.0;
  for (double m : mode_masses(omega, modulus.power, tol / modulus.scale)) sum += phi(m);
  return sum;
}

}  // namespace fockspec
