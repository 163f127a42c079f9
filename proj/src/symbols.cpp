#include "fockspec/symbols.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <cstdio>
#include <random>

#include "fockspec/error.hpp"
#include "fockspec/radial_spectrum.hpp"
#include "fockspec/specfun.hpp"

namespace fockspec {

namespace {

// Adaptive Gauss-Kronrod on [a, b], split into panels no wider than `panel`
// so narrow Poisson bumps are never straddled by a single coarse rule.
template <class F>
double integrate(const F& f, double a, double b, double panel = 4.0) {
  if (!(b > a)) return 0.0;
  using Rule = boost::math::quadrature::gauss_kronrod<double, 31>;
  const int panels = std::max(1, static_cast<int>(std::ceil((b - a) / panel)));
  double total = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double lo = a + (b - a) * i / panels;
    const double hi = a + (b - a) * (i + 1) / panels;
    total += Rule::integrate(f, lo, hi, 15, 1e-14);
  }
  return total;
}

constexpr double kTailTol = 1e-16;

}  // namespace

RadialSymbol RadialSymbol::piecewise(std::vector<SymbolPiece> pieces) {
  RadialSymbol s;
  for (const auto& p : pieces) {
    if (!std::isfinite(p.a) || !std::isfinite(p.b) || p.a < 0.0 || p.b < p.a)
      fail(ErrorCode::kDomain, "symbol piece must satisfy 0 <= a <= b < inf");
    if (!(p.value >= 0.0) || !std::isfinite(p.value))
      fail(ErrorCode::kDomain, "symbol values must be finite and nonnegative");
    if (p.b > p.a) s.pieces_.push_back(p);
  }
  std::sort(s.pieces_.begin(), s.pieces_.end(),
            [](const SymbolPiece& x, const SymbolPiece& y) { return x.a < y.a; });
  for (std::size_t i = 1; i < s.pieces_.size(); ++i)
    if (s.pieces_[i].a < s.pieces_[i - 1].b) fail(ErrorCode::kDomain, "symbol pieces overlap");
  if (s.pieces_.empty()) fail(ErrorCode::kDegenerate, "symbol has empty support");
  s.label_ = "piecewise";
  return s;
}

RadialSymbol RadialSymbol::indicator(const AnnulusUnion& omega) {
  std::vector<SymbolPiece> pieces;
  for (const auto& iv : omega.pieces()) pieces.push_back({iv.a, iv.b, 1.0});
  return piecewise(std::move(pieces));
}

RadialSymbol RadialSymbol::analytic(std::function<double(double)> f, double envelope_scale,
                                    double envelope_rate, std::string label) {
  if (!f) fail(ErrorCode::kDomain, "analytic symbol needs a function");
  if (!(envelope_scale > 0.0) || !(envelope_rate > 0.0) || !std::isfinite(envelope_scale))
    fail(ErrorCode::kDomain, "analytic symbol needs an integrable envelope scale * e^{-rate s}");
  RadialSymbol s;
  s.analytic_ = std::move(f);
  s.scale_ = envelope_scale;
  s.rate_ = envelope_rate;
  s.label_ = std::move(label);
  return s;
}

double RadialSymbol::operator()(double sigma) const {
  if (analytic_) return analytic_(sigma);
  for (const auto& p : pieces_)
    if (sigma >= p.a && sigma < p.b) return p.value;
  return 0.0;
}

double RadialSymbol::sup() const {
  if (analytic_) return analytic_(0.0);
  double m = 0.0;
  for (const auto& p : pieces_) m = std::max(m, p.value);
  return m;
}

double RadialSymbol::cutoff(double power, double tol) const {
  if (!analytic_) return pieces_.back().b;
  // int_S^inf (scale e^{-rate s})^power ds = scale^power e^{-power rate S} / (power rate)
  const double pr = power * rate_;
  const double s = (power * std::log(scale_) - std::log(pr * tol)) / pr;
  return std::max(s, 1.0);
}

double RadialSymbol::mode_envelope(int k) const {
  if (analytic_) return scale_ * std::exp(-(k + 1.0) * std::log1p(rate_));
  return sup() * specfun::reg_lower_gamma(k, pieces_.back().b);
}

RadialSymbol RadialSymbol::scaled(double factor) const {
  if (!(factor >= 0.0) || !std::isfinite(factor)) fail(ErrorCode::kDomain, "scale factor must be nonnegative");
  RadialSymbol s = *this;
  if (analytic_) {
    auto f = analytic_;
    s.analytic_ = [f, factor](double x) { return factor * f(x); };
    s.scale_ = scale_ * factor;
    if (!(s.scale_ > 0.0)) fail(ErrorCode::kDomain, "scaling an analytic symbol by zero");
  } else {
    for (auto& p : s.pieces_) p.value *= factor;
  }
  return s;
}

double symbol_mode_mass(const RadialSymbol& symbol, int k) {
  if (k < 0) fail(ErrorCode::kDomain, "symbol_mode_mass: negative mode index");
  if (symbol.is_piecewise()) {
    double total = 0.0;
    for (const auto& p : symbol.pieces())
      if (p.value > 0.0) total += p.value * specfun::gamma_mass(k, p.a, p.b);
    return total;
  }
  const double end = std::max(symbol.cutoff(1.0, kTailTol), 2.0 * k + 20.0);
  return integrate([&](double s) { return symbol(s) * specfun::poisson_term(k, s); }, 0.0, end);
}

double symbol_top_sum(const RadialSymbol& symbol, int K) {
  if (K < 1) fail(ErrorCode::kDomain, "symbol_top_sum: K must be positive");
  std::vector<double> masses;
  for (int k = 0; k < 1000000; ++k) {
    const double env = symbol.mode_envelope(k);
    if (static_cast<int>(masses.size()) >= K) {
      std::nth_element(masses.begin(), masses.begin() + (K - 1), masses.end(), std::greater<>());
      masses.resize(static_cast<std::size_t>(K));
      if (env < masses[static_cast<std::size_t>(K - 1)]) break;
    }
    if (env < 1e-300) break;
    masses.push_back(symbol_mode_mass(symbol, k));
  }
  std::sort(masses.begin(), masses.end(), std::greater<>());
  double sum = 0.0;
  for (int i = 0; i < std::min<int>(K, static_cast<int>(masses.size())); ++i)
    sum += masses[static_cast<std::size_t>(i)];
  return sum;
}

double distribution_function(const RadialSymbol& symbol, double t) {
  if (!(t > 0.0)) fail(ErrorCode::kDomain, "distribution_function: t must be positive");
  if (symbol.is_piecewise()) {
    double mu = 0.0;
    for (const auto& p : symbol.pieces())
      if (p.value > t) mu += p.b - p.a;
    return mu;
  }
  if (t >= symbol.sup()) return 0.0;
  // Nonincreasing: {sigma > t} = [0, s_t). Beyond hi the envelope is <= t.
  double lo = 0.0;
  double hi = std::max(0.0, std::log(symbol.envelope_scale() / t) / symbol.envelope_rate()) + 1.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (symbol(mid) > t) lo = mid; else hi = mid;
  }
  return 0.5 * (lo + hi);
}

RadialSymbol rearrange(const RadialSymbol& symbol) {
  if (!symbol.is_piecewise()) return symbol;  // analytic symbols are nonincreasing
  std::vector<SymbolPiece> pieces;
  for (const auto& p : symbol.pieces())
    if (p.value > 0.0) pieces.push_back(p);
  if (pieces.empty()) return symbol;
  std::stable_sort(pieces.begin(), pieces.end(),
                   [](const SymbolPiece& x, const SymbolPiece& y) { return x.value > y.value; });
  std::vector<SymbolPiece> out;
  double cursor = 0.0;
  for (const auto& p : pieces) {
    const double len = p.b - p.a;
    if (!out.empty() && out.back().value == p.value) {
      out.back().b += len;
    } else {
      out.push_back({cursor, cursor + len, p.value});
    }
    cursor += len;
  }
  return RadialSymbol::piecewise(std::move(out));
}

double lp_norm(const RadialSymbol& symbol, double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) fail(ErrorCode::kDomain, "lp_norm: p must be >= 1");
  double sum = 0.0;
  if (symbol.is_piecewise()) {
    for (const auto& piece : symbol.pieces()) sum += std::pow(piece.value, p) * (piece.b - piece.a);
  } else {
    const double end = symbol.cutoff(p, kTailTol);
    sum = integrate([&](double s) { return std::pow(symbol(s), p); }, 0.0, end);
  }
  return std::pow(sum, 1.0 / p);
}

double c_p_constant(int K, double p) {
  if (K < 1) fail(ErrorCode::kDomain, "c_p_constant: K must be positive");
  if (!(p > 1.0) || !std::isfinite(p)) fail(ErrorCode::kDomain, "c_p_constant: p must exceed 1");
  const double q = p / (p - 1.0);
  // G_K'(s) <= (2^K - 1) e^{-s/2}, so the integrand is below C e^{-q s / 2}.
  const double log_c = q * std::log(std::exp2(K) - 1.0);
  const double rate = q / 2.0;
  const double end = std::max(1.0, (log_c - std::log(rate * 1e-17)) / rate);
  const double integral =
      integrate([&](double s) { return std::pow(specfun::g_K_prime(K, s), q); }, 0.0, end);
  return std::pow(integral, 1.0 / p);
}

RadialSymbol sigma_p(int K, double p, double B) {
  if (!(B > 0.0) || !std::isfinite(B)) fail(ErrorCode::kDomain, "sigma_p: B must be positive");
  const double cp = c_p_constant(K, p);
  const double peak = B / cp;
  const double expo = 1.0 / (p - 1.0);
  auto f = [K, peak, expo](double s) { return peak * std::pow(specfun::g_K_prime(K, s), expo); };
  const double scale = peak * std::pow(std::exp2(K) - 1.0, expo);
  const double rate = expo / 2.0;
  char label[96];
  std::snprintf(label, sizeof label, "sigma_p(K=%d,p=%g,B=%g)", K, p, B);
  return RadialSymbol::analytic(std::move(f), scale, rate, label);
}

double mu_p(int K, double p, double B, double t) {
  if (!(t > 0.0)) fail(ErrorCode::kDomain, "mu_p: t must be positive");
  const double cp = c_p_constant(K, p);
  if (t >= B / cp) return 0.0;
  const double target = std::pow(t * cp / B, p - 1.0);
  double lo = 0.0, hi = 1.0;
  while (specfun::g_K_prime(K, hi) > target) hi *= 2.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (specfun::g_K_prime(K, mid) > target) lo = mid; else hi = mid;
  }
  return 0.5 * (lo + hi);
}

double layer_cake_top_sum(const RadialSymbol& symbol, int K) {
  if (K < 1) fail(ErrorCode::kDomain, "layer_cake_top_sum: K must be positive");
  if (symbol.is_piecewise()) {
    // mu is a step function: on [v_{i+1}, v_i) it is the measure where sigma >= v_i.
    std::vector<double> levels;
    for (const auto& p : symbol.pieces())
      if (p.value > 0.0) levels.push_back(p.value);
    std::sort(levels.begin(), levels.end(), std::greater<>());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    double total = 0.0;
    for (std::size_t i = 0; i < levels.size(); ++i) {
      const double below = i + 1 < levels.size() ? levels[i + 1] : 0.0;
      double mu = 0.0;
      for (const auto& p : symbol.pieces())
        if (p.value >= levels[i]) mu += p.b - p.a;
      total += (levels[i] - below) * specfun::g_K(K, mu);
    }
    return total;
  }
  // t = top e^{-y}: G_K(mu(t)) approaches K like a power of t near t = 0, which
  // is smooth in y. The integrand tends to K e^{-y} and the tail is closed exactly.
  const double top = symbol.sup();
  const double y_end = 40.0 + std::log(std::max(1.0, K * top));
  const double body = integrate(
      [&](double y) {
        const double t = top * std::exp(-y);
        return t > 0.0 ? specfun::g_K(K, distribution_function(symbol, t)) * t : 0.0;
      },
      0.0, y_end);
  return body + K * top * std::exp(-y_end);
}

double symbol_distance(const RadialSymbol& x, const RadialSymbol& y) {
  const double end = std::max(x.cutoff(1.0, 1e-12), y.cutoff(1.0, 1e-12));
  constexpr int kGrid = 4000;
  double worst = 0.0;
  for (int i = 0; i < kGrid; ++i) {
    const double s = (i + 0.5) * end / kGrid;
    worst = std::max(worst, std::fabs(x(s) - y(s)));
  }
  return worst;
}

RearrangementReport check_rearrangement(const RadialSymbol& symbol, int K) {
  const RadialSymbol star = rearrange(symbol);
  RearrangementReport out;
  out.rhs_spectral = symbol_top_sum(star, K);
  out.rhs_layer_cake = layer_cake_top_sum(symbol, K);
  out.routes_agree = std::fabs(out.rhs_spectral - out.rhs_layer_cake) <= 1e-6;
  const bool equal = symbol_distance(symbol, star) < 1e-6;
  out.report = make_report("rearrangement_top_" + std::to_string(K), symbol_top_sum(symbol, K),
                           out.rhs_spectral, equal);
  out.report.satisfied = out.report.satisfied && out.routes_agree;
  return out;
}

CheckReport check_optimal_symbol(const RadialSymbol& symbol, int K, double p, double B) {
  if (!(p > 1.0)) fail(ErrorCode::kDomain, "check_optimal_symbol: p must exceed 1");
  const double norm = lp_norm(symbol, p);
  if (norm > B + 1e-9)
    fail(ErrorCode::kPrecondition, "check_optimal_symbol: ||sigma||_p = " + std::to_string(norm) +
                                       " exceeds B = " + std::to_string(B));
  const RadialSymbol best = sigma_p(K, p, B);
  const double tol = 1e-6 * std::max(1.0, best.sup());
  return make_report("optimal_symbol_top_" + std::to_string(K), symbol_top_sum(symbol, K),
                     symbol_top_sum(best, K), symbol_distance(symbol, best) < tol);
}

RadialSymbol random_piecewise_symbol(std::uint64_t seed, int max_pieces, double b_max) {
  if (max_pieces < 1 || max_pieces > 64) fail(ErrorCode::kDomain, "random symbol: max_pieces in [1, 64]");
  if (!(b_max > 0.0)) fail(ErrorCode::kDomain, "random symbol: b_max must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int m = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_pieces));
  // 2m sorted cut points in [0, b_max]; pieces are [c_{2i}, c_{2i+1}).
  std::vector<double> cuts(2 * static_cast<std::size_t>(m));
  for (auto& c : cuts) c = b_max * unit(rng) * unit(rng);
  if (unit(rng) < 0.3) cuts[0] = 0.0;
  std::sort(cuts.begin(), cuts.end());
  std::vector<SymbolPiece> pieces;
  for (int i = 0; i < m; ++i)
    pieces.push_back({cuts[2 * i], cuts[2 * i + 1], 0.1 + 3.0 * unit(rng)});
  bool any = false;
  for (const auto& p : pieces) any = any || p.b > p.a;
  if (!any) pieces.front().b = pieces.front().a + 0.5;
  return RadialSymbol::piecewise(std::move(pieces));
}

}  // namespace fockspec
