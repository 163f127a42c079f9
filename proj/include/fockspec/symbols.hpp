#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fockspec/extremal.hpp"
#include "fockspec/radial_domain.hpp"

namespace fockspec {

/// Constant value on [a, b) in sigma-units.
struct SymbolPiece {
  double a = 0.0;
  double b = 0.0;
  double value = 0.0;
};

/// Nonnegative radial symbol, either piecewise constant or an analytic
/// function of sigma with a declared envelope sigma(s) <= scale * e^{-rate s}.
/// Analytic symbols must be nonincreasing in sigma.
class RadialSymbol {
 public:
  static RadialSymbol piecewise(std::vector<SymbolPiece> pieces);
  static RadialSymbol indicator(const AnnulusUnion& omega);
  static RadialSymbol analytic(std::function<double(double)> f, double envelope_scale,
                               double envelope_rate, std::string label);

  bool is_piecewise() const { return !analytic_; }
  const std::vector<SymbolPiece>& pieces() const { return pieces_; }
  const std::string& label() const { return label_; }
  double envelope_scale() const { return scale_; }
  double envelope_rate() const { return rate_; }

  double operator()(double sigma) const;
  /// Essential supremum.
  double sup() const;
  /// Point beyond which int sigma(s)^power ds is below tol (piecewise: end of
  /// the last piece).
  double cutoff(double power, double tol) const;
  /// Upper bound on symbol_mode_mass(*this, j) for every j >= k.
  double mode_envelope(int k) const;

  RadialSymbol scaled(double factor) const;

 private:
  RadialSymbol() = default;

  std::vector<SymbolPiece> pieces_;
  std::function<double(double)> analytic_;
  double scale_ = 0.0;
  double rate_ = 0.0;
  std::string label_;
};

/// <T_sigma e_k, e_k> = int_0^inf sigma(s) e^{-s} s^k / k! ds.
double symbol_mode_mass(const RadialSymbol& symbol, int k);

/// Sum of the K largest eigenvalues of T_sigma.
double symbol_top_sum(const RadialSymbol& symbol, int K);

/// mu(t) = |{sigma > t}|.
double distribution_function(const RadialSymbol& symbol, double t);

/// Decreasing rearrangement sigma*.
RadialSymbol rearrange(const RadialSymbol& symbol);

/// (int sigma^p ds)^{1/p} in sigma-units, p >= 1.
double lp_norm(const RadialSymbol& symbol, double p);

/// c_p with c_p^p = int_0^inf G_K'(s)^{p/(p-1)} ds.
double c_p_constant(int K, double p);

/// The L^p-constrained maximizer (B/c_p) G_K'(s)^{1/(p-1)}.
RadialSymbol sigma_p(int K, double p, double B);

/// mu_p(t): solves (B/c_p) G_K'(mu)^{1/(p-1)} = t, and 0 for t >= B/c_p.
double mu_p(int K, double p, double B, double t);

/// int_0^inf G_K(mu(t)) dt for the distribution function of symbol.
double layer_cake_top_sum(const RadialSymbol& symbol, int K);

/// Pointwise sup-distance between two symbols on a grid over their support.
double symbol_distance(const RadialSymbol& x, const RadialSymbol& y);

struct RearrangementReport {
  CheckReport report;
  double rhs_spectral = 0.0;  // top-K sum of the rearrangement
  double rhs_layer_cake = 0.0;
  bool routes_agree = false;  // |rhs_spectral - rhs_layer_cake| <= 1e-6
};

RearrangementReport check_rearrangement(const RadialSymbol& symbol, int K);

/// Requires lp_norm(symbol, p) <= B + 1e-9 (kPrecondition otherwise).
CheckReport check_optimal_symbol(const RadialSymbol& symbol, int K, double p, double B);

/// Seeded random piecewise symbol with up to max_pieces pieces in [0, b_max].
RadialSymbol random_piecewise_symbol(std::uint64_t seed, int max_pieces, double b_max);

}  // namespace fockspec
