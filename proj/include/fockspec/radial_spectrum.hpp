#pragma once

#include <functional>
#include <span>
#include <vector>

#include "fockspec/radial_domain.hpp"

namespace fockspec {

struct Mode {
  double lambda = 0.0;
  int mode_index = 0;
};

/// Decreasingly sorted eigenvalues of a radial localization operator.
///
/// Every omitted eigenvalue is at most tail_bound. When the requested count
/// could not be resolved above the tolerance, truncated is set and only the
/// certified prefix is kept.
struct Spectrum {
  std::vector<Mode> entries;
  double tail_bound = 0.0;
  bool truncated = false;
  /// Ranks r with |lambda_r - lambda_{r+1}| < 1e-12 (numerical ties).
  std::vector<int> near_ties;

  double lambda(int rank) const { return entries.at(static_cast<std::size_t>(rank)).lambda; }
};

inline constexpr double kTieGap = 1e-12;

/// <T_Omega e_k, e_k>, the eigenvalue carried by the monomial e_k.
double mode_mass(const AnnulusUnion& omega, int k);

/// Upper bound reg_lower_gamma(k, outer radius) on mode_mass(omega, j) for all j >= k.
double mode_envelope(const AnnulusUnion& omega, int k);

Spectrum spectrum_top(const AnnulusUnion& omega, int n, double tol = 1e-15);

/// lambda_1 + ... + lambda_K.
double sum_top(const AnnulusUnion& omega, int K);

/// sum_k t_k lambda_k for decreasing positive weights (not checked here).
double weighted_sum(const AnnulusUnion& omega, std::span<const double> weights);

/// Schatten (quasi-)norm (sum lambda^p)^{1/p}; p = 1 is the trace and is rejected.
double schatten(const AnnulusUnion& omega, double p, double tol = 1e-13);

/// Caller-declared bound |phi(t)| <= scale * t^power on (0, 1).
struct PhiModulus {
  double scale = 1.0;
  double power = 1.0;
};

/// sum_k phi(mode_mass(omega, k)) over all modes, truncated once the declared
/// modulus certifies the remaining contribution is below tol.
double trace_phi(const AnnulusUnion& omega, const std::function<double(double)>& phi,
                 PhiModulus modulus, double tol = 1e-13);

/// All mode masses with k < k_end where k_end is the first index after which
/// sum_{j>=k_end} envelope_j^power <= tol.
std::vector<double> mode_masses(const AnnulusUnion& omega, double power, double tol);

}  // namespace fockspec
