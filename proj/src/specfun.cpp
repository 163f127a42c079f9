#include "fockspec/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "fockspec/error.hpp"

namespace fockspec::specfun {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = 1e-300;
constexpr int kMaxIterations = 100000;

void check_args(int k, double s, const char* who) {
  if (k < 0) fail(ErrorCode::kDomain, std::string(who) + ": negative mode index");
  if (std::isnan(s) || s < 0.0)
    fail(ErrorCode::kDomain, std::string(who) + ": argument must be nonnegative");
  if (!(s <= kMaxArgument))
    fail(ErrorCode::kDomain, std::string(who) + ": argument is overflow-scale");
}

constexpr std::array<double, 16> kFactorials = [] {
  std::array<double, 16> f{};
  f[0] = 1.0;
  for (int i = 1; i < 16; ++i) f[i] = f[i - 1] * i;
  return f;
}();

// lgamma(n+1) - [(n+1/2) ln n - n + ln sqrt(2 pi)], asymptotic series for n > 15.
double stirling_error(double n) {
  constexpr double s0 = 1.0 / 12.0;
  constexpr double s1 = 1.0 / 360.0;
  constexpr double s2 = 1.0 / 1260.0;
  constexpr double s3 = 1.0 / 1680.0;
  constexpr double s4 = 1.0 / 1188.0;
  const double nn = n * n;
  if (n > 500) return (s0 - s1 / nn) / n;
  if (n > 80) return (s0 - (s1 - s2 / nn) / nn) / n;
  if (n > 35) return (s0 - (s1 - (s2 - s3 / nn) / nn) / nn) / n;
  return (s0 - (s1 - (s2 - (s3 - s4 / nn) / nn) / nn) / nn) / n;
}

// Deviance term x ln(x/m) + m - x, with a series near x == m.
double deviance(double x, double m) {
  if (std::fabs(x - m) < 0.1 * (x + m)) {
    double v = (x - m) / (x + m);
    double s = (x - m) * v;
    if (std::fabs(s) < std::numeric_limits<double>::min()) return s;
    double ej = 2 * x * v;
    v *= v;
    for (int j = 1; j < 1000; ++j) {
      ej *= v;
      const double next = s + ej / (2 * j + 1);
      if (next == s) return next;
      s = next;
    }
    return s;
  }
  return x * std::log(x / m) + m - x;
}

double poisson_unchecked(int k, double s) {
  if (s == 0.0) return k == 0 ? 1.0 : 0.0;
  if (k == 0) return std::exp(-s);
  if (k < 16 && s < 700.0) return std::exp(-s) * std::pow(s, k) / kFactorials[k];
  const double n = k;
  const double dev = deviance(n, s);
  // Far tails: exp(-dev) amplifies rounding by dev, so multiply out instead.
  // The running product peaks at j ~ s <= 700 and cannot overflow.
  if (dev > 30.0 && s < 700.0 && k <= 4096) {
    double v = std::exp(-s);
    for (int j = 1; j <= k; ++j) v *= s / j;
    return v;
  }
  if (dev > 30.0) {
    // exp(-dev) has relative error dev * ulp(dev); evaluate with the wider type.
    const long double x = n;
    const long double m = s;
    const long double d = x * std::log(x / m) + (m - x);
    return static_cast<double>(std::exp(-static_cast<long double>(stirling_error(n)) - d) /
                               std::sqrt(2.0L * std::numbers::pi_v<long double> * x));
  }
  return std::exp(-stirling_error(n) - dev) / std::sqrt(2.0 * std::numbers::pi * n);
}

// Series for P(a, s) with a = k+1 and s < a.
double lower_series(int k, double s) {
  const double a = k + 1.0;
  double sum = 1.0;
  double term = 1.0;
  for (int n = 1; n < kMaxIterations; ++n) {
    term *= s / (a + n);
    sum += term;
    if (term < sum * kEps) break;
  }
  return poisson_unchecked(k + 1, s) * sum;
}

// Lentz continued fraction for Q(a, s) with a = k+1 and s >= a.
double upper_fraction(int k, double s) {
  const double a = k + 1.0;
  double b = s + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxIterations; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) break;
  }
  return s * poisson_unchecked(k, s) * h;
}

}  // namespace

double poisson_term(int k, double s) {
  check_args(k, s, "poisson_term");
  return poisson_unchecked(k, s);
}

double reg_lower_gamma(int k, double s) {
  check_args(k, s, "reg_lower_gamma");
  if (s == 0.0) return 0.0;
  if (s < k + 1.0) return lower_series(k, s);
  return 1.0 - upper_fraction(k, s);
}

double reg_upper_gamma(int k, double s) {
  check_args(k, s, "reg_upper_gamma");
  if (s == 0.0) return 1.0;
  if (s < k + 1.0) return 1.0 - lower_series(k, s);
  return upper_fraction(k, s);
}

double gamma_mass(int k, double a, double b) {
  check_args(k, a, "gamma_mass");
  check_args(k, b, "gamma_mass");
  if (b < a) fail(ErrorCode::kDomain, "gamma_mass: reversed interval");
  if (a == b) return 0.0;
  // Both endpoints right of the mode peak: subtract upper tails.
  if (a >= k + 1.0) return std::max(0.0, reg_upper_gamma(k, a) - reg_upper_gamma(k, b));
  return std::max(0.0, reg_lower_gamma(k, b) - reg_lower_gamma(k, a));
}

double g_K(int K, double s) {
  if (K < 1) fail(ErrorCode::kDomain, "g_K: K must be positive");
  double sum = 0.0;
  for (int j = 0; j < K; ++j) sum += reg_lower_gamma(j, s);
  return sum;
}

double g_K_prime(int K, double s) {
  if (K < 1) fail(ErrorCode::kDomain, "g_K_prime: K must be positive");
  return reg_upper_gamma(K - 1, s);
}

}  // namespace fockspec::specfun
