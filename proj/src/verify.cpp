#include "fockspec/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "fockspec/error.hpp"
#include "fockspec/nonradial.hpp"
#include "fockspec/radial_spectrum.hpp"
#include "fockspec/specfun.hpp"
#include "fockspec/superlevel.hpp"
#include "fockspec/symbols.hpp"

namespace fockspec {

namespace {

constexpr std::array<std::string_view, 14> kSuites = {
    "faber_krahn", "krahn_szego", "sum_topk", "trace",       "trace_phi", "schatten",  "weighted",
    "bathtub",     "chain",       "symmetry", "translation", "kernel",    "symbols",   "karamata"};

// Per-suite seed so suites do not share random streams.
std::uint64_t mix(std::uint64_t seed, std::uint64_t salt, std::uint64_t i) {
  std::uint64_t z = seed * 0x9E3779B97F4A7C15ull + salt * 0xBF58476D1CE4E5B9ull + i;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

AnnulusUnion family_member(const VerifyOptions& opt, std::uint64_t salt, int i, double s = 1.0) {
  return random_radial_set(mix(opt.seed, salt, static_cast<std::uint64_t>(i)), s, 6, 40.0);
}

void faber_krahn(const VerifyOptions& opt, std::vector<CheckReport>& out) {
  for (double s : {0.1, 1.0, 5.0}) {
    const double l1 = spectrum_top(AnnulusUnion::ball(s), 1).lambda(0);
    out.push_back(make_report("faber_krahn/ball(s=" + std::to_string(s) + ")", l1, -std::expm1(-s), true));
  }
  std::vector<CheckReport> fam;
  for (int i = 0; i < opt.instances; ++i) fam.push_back(check_sum_topk(family_member(opt, 1, i), 1));
  out.push_back(worst_case("faber_krahn/random", fam));
}

void krahn_szego(const VerifyOptions& opt, std::vector<CheckReport>& out) {
  for (double s : {0.5, 1.0, 2.0}) {
    CheckReport r = check_krahn_szego(optimal_annulus(s));
    r.name = "krahn_szego/optimal_annulus(s=" + std::to_string(s) + ")";
    out.push_back(r);
  }
  std::vector<CheckReport> fam;
  for (int i = 0; i < opt.instances; ++i) fam.push_back(check_krahn_szego(family_member(opt, 2, i)));
  out.push_back(worst_case("krahn_szego/random", fam));
}

void sum_topk(const VerifyOptions& opt, std::vector<CheckReport>& out) {
  for (int K = 1; K <= 6; ++K) {
    std::vector<CheckReport> fam;
    fam.push_back(check_sum_topk(AnnulusUnion::ball(1.0), K));
    for (int i = 0; i < opt.instances; ++i) fam.push_back(check_sum_topk(family_member(opt, 3, i), K));
    out.push_back(worst_case("sum_topk/K=" + std::to_string(K), fam));
  }
}

void trace(const VerifyOptions& opt, std::vector<CheckReport>& out) {
  double worst = 0.0;
  for (int i = 0; i < opt.instances; ++i) {
    std::mt19937_64 rng(mix(opt.seed, 4, static_cast<std::uint64_t>(i)));
    const double s = 0.1 + 9.9 * std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    const AnnulusUnion omega = random_radial_set(rng(), s, 6, 40.0);
    const double tr = trace_phi(omega, [](double t) { return t; }, {1.0, 1.0}, 1e-12);
    worst = std::max(worst, std::fabs(tr - omega.measure()));
  }
  out.push_back(make_report("trace/identity_error", worst, 1e-8, false));
}

struct NamedPhi {
  const char* name;
  std::function<double(double)> phi;
  PhiModulus modulus;
};

const std::vector<NamedPhi>& convex_family() {
  static const std::vector<NamedPhi> family = {
      {"t^2", [](double t) { return t * t; }, {1.0, 2.0}},
      {"t^3", [](double t) { return t * t * t; }, {1.0, 3.0}},
      {"t*log(t)+t", [](double t) { return t > 0 ? t * std::log(t) + t : 0.0; }, {5.0, 0.9}},
      {"-sqrt(t)", [](double t) { return -std::sqrt(t); }, {1.0, 0.5}},
  };
  return family;
}

void trace_phi_suite(const VerifyOptions& opt, std::vector<CheckReport>& out) {
  const AnnulusUnion ball = AnnulusUnion::ball(1.0);
  for (const auto& f : convex_family()) {
    const double rhs = trace_phi(ball, f.phi, f.modulus);
    std::vector<CheckReport> fam;
    for (int i = 0; i < opt.instances; ++i) {
      const AnnulusUnion omega = family_member(opt, 5, i);
      fam.push_back(make_report("", trace_phi(omega, f.phi, f.modulus), rhs,
                                symmetric_difference(omega, ball) < kEqualitySymDiff));
    }
    out.push_back(worst_case(std::string("trace_phi/") + f.name, fam));
  }
}

void schatten_suite(const VerifyOptions& opt, std::vector<CheckReport>& out) {
  const AnnulusUnion ball = AnnulusUnion::ball(1.0);
  for (double p : {0.5, 0.8, 1.5, 2.0, 3.0}) {
    const double at_ball = schatten(ball, p);
    std::vector<CheckReport> fam;
    for (int i = 0; i < opt.instances; ++i) {
      const AnnulusUnion omega = family_member(opt, 6, i);
      const double v = schatten(omega, p);
      const bool eq = symmetric_difference(omega, ball) < kEqualitySymDiff;
      // Ball maximizes the norm for p > 1 and minimizes the quasi-norm for p < 1.
      fam.push_back(p > 1.0 ? make_report("", v, at_ball, eq) : make_report("", at_ball, v, eq));
    }
    out.push_back(worst_case("schatten/p=" + std::to_string(p), fam));
  }
}

void weighted(const VerifyOptions& opt, std::vector<CheckReport>& out) {
  std::vector<CheckReport> fam;
  for (int i = 0; i < opt.instances; ++i) {
    std::mt19937_64 rng(mix(opt.seed, 7, static_cast<std::uint64_t>(i)));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> w(1 + rng() % 6);
    for (auto& x : w) x = 0.1 + unit(rng);
    std::sort(w.begin(), w.end(), std::greater<>());
    fam.push_back(check_weighted_sum(family_member(opt, 7, i), w));
  }
  out.push_back(worst_case("weighted_sum/random", fam));
  // Increasing weights on the small annulus reverse the inequality.
  const std::array<double, 2> increasing{1.0, 2.0};
  const CheckReport rev = weighted_sum_comparison(weight_counterexample_annulus(0.01), increasing);
  out.push_back(make_report("weighted_sum/non_monotone_reversal", rev.rhs, rev.lhs, false));
}

void bathtub(const VerifyOptions& opt, std::vector<CheckReport>& out) {
  std::vector<CheckReport> fam;
  for (int i = 0; i < opt.instances; ++i) {
    std::mt19937_64 rng(mix(opt.seed, 8, static_cast<std::uint64_t>(i)));
    std::vector<int> idx;
    for (int k = 0; k <= 12; ++k)
      if (rng() % 3 == 0) idx.push_back(k);
    if (idx.empty()) idx.push_back(static_cast<int>(rng() % 8));
    const IndexVector alpha(idx);
    const AnnulusUnion omega = random_radial_set(rng(), 1.0 + static_cast<double>(rng() % 4), 6, 30.0);
    double lhs = 0.0;
    for (int k : alpha.indices()) lhs += mode_mass(omega, k);
    fam.push_back(make_report("", lhs, bathtub_integral(alpha, omega.measure()), false));
  }
  out.push_back(worst_case("bathtub/random", fam));
}

void chain(const VerifyOptions& opt, std::vector<CheckReport>& out) {
  for (double s : {0.5, 1.0, 3.0}) {
    std::vector<CheckReport> steps;
    double terminal_error = 0.0;
    double gain_error = 0.0;
    for (int i = 0; i < opt.instances; ++i) {
      std::mt19937_64 rng(mix(opt.seed, 9, static_cast<std::uint64_t>(i)));
      const int K = 1 + static_cast<int>(rng() % 5);
      std::vector<int> pool(21);
      for (int k = 0; k <= 20; ++k) pool[static_cast<std::size_t>(k)] = k;
      std::shuffle(pool.begin(), pool.end(), rng);
      std::vector<int> idx(pool.begin(), pool.begin() + K);
      std::sort(idx.begin(), idx.end());
      const auto c = reduce_chain(IndexVector(idx), s);
      // Increments come from the cancellation-free gain; strict when l > 0
      // or when the move lands on (0, ..., K-1).
      for (std::size_t j = 0; j + 1 < c.size(); ++j) {
        const double gain = c[j + 1].gain;
        CheckReport r = make_report("", 0.0, gain, false);
        r.satisfied = (c[j].leading > 0 || c[j + 1].alpha.is_leading()) ? gain > 0.0 : gain >= 0.0;
        steps.push_back(r);
        gain_error = std::max(gain_error, std::fabs(gain - (c[j + 1].integral - c[j].integral)));
      }
      terminal_error = std::max(terminal_error, std::fabs(c.back().integral - specfun::g_K(K, s)));
    }
    if (steps.empty()) steps.push_back(make_report("", 0.0, 0.0, true));
    out.push_back(worst_case("chain/monotone(s=" + std::to_string(s) + ")", steps));
    out.push_back(make_report("chain/gain_consistency(s=" + std::to_string(s) + ")", gain_error, 1e-10, false));
    out.push_back(make_report("chain/terminal_error(s=" + std::to_string(s) + ")", terminal_error, 1e-9, false));
  }
  // The two Poisson weights k and k-1 integrate equally over superlevel sets of the k-th.
  double identity_error = 0.0;
  for (int k = 1; k <= 30; ++k) {
    const WeightProfile profile(IndexVector({k}));
    for (int j = 1; j <= 20; ++j) {
      const AnnulusUnion e = profile.superlevel_at(profile.max_value() * j / 21.0);
      identity_error = std::max(identity_error, std::fabs(mode_mass(e, k) - mode_mass(e, k - 1)));
    }
  }
  out.push_back(make_report("chain/shift_identity_error", identity_error, 1e-10, false));
}

void symmetry(const VerifyOptions&, std::vector<CheckReport>& out) {
  const SymmetryBreakingReport r = symmetry_breaking_experiment(0.2, 2.0, 64);
  out.push_back(r.report);
  out.push_back(make_report("symmetry_breaking/analytic_lower_bound", r.analytic_lower_bound - 1e-6,
                            r.lambda2, false));
  out.push_back(make_report("symmetry_breaking/limit_distance", std::fabs(r.lambda2 - r.limit_value), 1e-4,
                            false));
}

void translation(const VerifyOptions&, std::vector<CheckReport>& out) {
  const double radius = std::sqrt(1.0 / std::numbers::pi);
  for (double w : {0.5, 1.0, 2.0}) {
    const int N = 48 + static_cast<int>(std::ceil(8.0 * std::numbers::pi * w * w));
    const DiskUnion disk({{std::polar(w, 0.7), radius}});
    const auto eig = hermitian_eigenvalues(toeplitz_matrix(disk, N, default_quad_order(N)));
    double worst = 0.0;
    for (int k = 0; k < 8; ++k)
      worst = std::max(worst, std::fabs(eig[static_cast<std::size_t>(k)] - specfun::reg_lower_gamma(k, 1.0)));
    out.push_back(make_report("translation/|w|=" + std::to_string(w), worst, 1e-6, false));
  }
}

void kernel(const VerifyOptions&, std::vector<CheckReport>& out) {
  double worst = 0.0;
  for (double r : {0.25, 0.5, 1.0, 1.5, 2.0}) {
    const Complex w = std::polar(r, 0.3);
    const double pw = std::numbers::pi * r * r;
    const int N = 64 + static_cast<int>(4 * pw);
    const double e1 = std::abs(kernel_inner_product(w, w, N) - std::exp(pw)) / std::exp(pw);
    const double e2 = std::abs(kernel_inner_product(-w, w, N) - std::exp(-pw));
    worst = std::max({worst, e1, e2});
  }
  out.push_back(make_report("kernel/norm_identities", worst, 1e-10, false));
}

void symbols(const VerifyOptions& opt, std::vector<CheckReport>& out) {
  for (int K : {1, 2, 3}) {
    for (double p : {1.5, 2.0, 3.0}) {
      const std::string tag = "(K=" + std::to_string(K) + ",p=" + std::to_string(p) + ")";
      out.push_back(make_report("symbols/norm_error" + tag, std::fabs(lp_norm(sigma_p(K, p, 1.0), p) - 1.0),
                                1e-8, false));
      std::vector<CheckReport> fam;
      const int n = std::max(1, opt.instances / 4);
      for (int i = 0; i < n; ++i) {
        const RadialSymbol raw = random_piecewise_symbol(mix(opt.seed, 10, static_cast<std::uint64_t>(i)), 5, 8.0);
        const RadialSymbol sym = raw.scaled(1.0 / lp_norm(raw, p));
        fam.push_back(check_optimal_symbol(sym, K, p, 1.0));
      }
      out.push_back(worst_case("symbols/optimal" + tag, fam));
    }
  }
  std::vector<CheckReport> fam;
  for (int i = 0; i < opt.instances; ++i) {
    const RadialSymbol sym = random_piecewise_symbol(mix(opt.seed, 11, static_cast<std::uint64_t>(i)), 5, 8.0);
    fam.push_back(check_rearrangement(sym, 1 + i % 4).report);
  }
  out.push_back(worst_case("symbols/rearrangement", fam));
}

void karamata(const VerifyOptions& opt, std::vector<CheckReport>& out) {
  const auto family = convex_family();
  std::vector<CheckReport> fam;
  double affine = 0.0;
  for (int i = 0; i < opt.instances * 10; ++i) {
    std::mt19937_64 rng(mix(opt.seed, 12, static_cast<std::uint64_t>(i)));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    // y decreasing in (0,1); x obtained by Robin Hood transfers keeps x majorized by y.
    const std::size_t n = 2 + rng() % 10;
    std::vector<double> y(n);
    for (auto& v : y) v = 0.01 + 0.98 * unit(rng);
    std::sort(y.begin(), y.end(), std::greater<>());
    std::vector<double> x = y;
    for (int t = 0; t < 5; ++t) {
      const std::size_t a = rng() % n, b = rng() % n;
      if (x[a] > x[b]) {
        const double d = 0.5 * (x[a] - x[b]) * unit(rng);
        x[a] -= d;
        x[b] += d;
      }
    }
    std::sort(x.begin(), x.end(), std::greater<>());
    const auto& f = family[static_cast<std::size_t>(i) % family.size()];
    fam.push_back(karamata_check(x, y, f.phi));
    affine = std::max(affine, std::fabs(karamata_check(x, y, [](double t) { return 2.0 * t; }).margin));
  }
  out.push_back(worst_case("karamata/convex", fam));
  out.push_back(make_report("karamata/affine_margin", affine, 1e-12, false));
}

}  // namespace

std::span<const std::string_view> suite_names() { return kSuites; }

CheckReport worst_case(std::string name, std::span<const CheckReport> family) {
  if (family.empty()) fail(ErrorCode::kDomain, "worst_case: empty family");
  const auto it = std::min_element(family.begin(), family.end(),
                                   [](const CheckReport& a, const CheckReport& b) { return a.margin < b.margin; });
  CheckReport r = *it;
  r.name = std::move(name);
  r.satisfied = std::all_of(family.begin(), family.end(), [](const CheckReport& c) { return c.satisfied; });
  return r;
}

std::vector<CheckReport> run_suite(std::string_view suite, const VerifyOptions& options) {
  using Runner = void (*)(const VerifyOptions&, std::vector<CheckReport>&);
  static constexpr std::array<Runner, kSuites.size()> runners = {
      faber_krahn, krahn_szego, sum_topk, trace,  trace_phi_suite, schatten_suite, weighted,
      bathtub,     chain,       symmetry, translation, kernel,     symbols,        karamata};
  std::vector<CheckReport> out;
  if (suite == "all") {
    for (auto run : runners) run(options, out);
    return out;
  }
  for (std::size_t i = 0; i < kSuites.size(); ++i) {
    if (kSuites[i] == suite) {
      runners[i](options, out);
      return out;
    }
  }
  fail(ErrorCode::kDomain, "unknown suite '" + std::string(suite) + "'");
}

}  // namespace fockspec
