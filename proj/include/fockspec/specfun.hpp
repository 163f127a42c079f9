#pragma once

// Scalar special functions behind every eigenvalue formula.
//
// All functions take the mode index k (or the count K) and an argument s in
// sigma-units (s = pi r^2). Out-of-domain arguments throw fockspec::Error.

namespace fockspec::specfun {

// Largest argument accepted before the functions report an overflow-scale
// domain error.
inline constexpr double kMaxArgument = 1e15;

/// e^{-s} s^k / k!, evaluated without forming s^k or k! for large k.
double poisson_term(int k, double s);

/// Regularized lower incomplete gamma P(k+1, s) = int_0^s x^k e^{-x} / k! dx.
/// This is the k-th ball eigenvalue for a ball of area s.
double reg_lower_gamma(int k, double s);

/// Complement 1 - reg_lower_gamma(k, s), computed without cancellation.
double reg_upper_gamma(int k, double s);

/// int_a^b x^k e^{-x} / k! dx for 0 <= a <= b, choosing the tail that avoids
/// cancellation.
double gamma_mass(int k, double a, double b);

/// G_K(s) = K - sum_{k<K} (K-k) s^k e^{-s} / k!, evaluated through the
/// telescoped form sum_{j<K} reg_lower_gamma(j, s).
double g_K(int K, double s);

/// G_K'(s) = e^{-s} sum_{k<K} s^k / k!.
double g_K_prime(int K, double s);

}  // namespace fockspec::specfun
