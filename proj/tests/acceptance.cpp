// Acceptance run: one PASS/FAIL line per criterion with its measured worst
// value and wall time. Exit status is nonzero if any criterion fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "fockspec/extremal.hpp"
#include "fockspec/nonradial.hpp"
#include "fockspec/radial_domain.hpp"
#include "fockspec/radial_spectrum.hpp"
#include "fockspec/specfun.hpp"
#include "fockspec/superlevel.hpp"
#include "fockspec/symbols.hpp"

using namespace fockspec;

namespace {

constexpr std::uint64_t kSeed = 20240611;

std::uint64_t stream(std::uint64_t salt, std::uint64_t i) {
  std::seed_seq seq{kSeed, salt, i};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

AnnulusUnion family(int i) { return random_radial_set(stream(1, static_cast<std::uint64_t>(i)), 1.0, 6, 40.0); }

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Outcome()> run;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

Outcome faber_krahn() {
  Outcome o;
  double worst = 0.0;
  const auto t0 = std::chrono::steady_clock::now();
  for (double s : {0.1, 1.0, 5.0}) {
    const double l1 = spectrum_top(AnnulusUnion::ball(s), 1).lambda(0);
    worst = std::max(worst, std::fabs(l1 + std::expm1(-s)));
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  o.pass = worst <= 1e-12 && ms < 1.0;
  o.detail = fmt("max |lambda1 - (1-e^-s)| = %.3e, %.3f ms", worst, ms);
  return o;
}

Outcome krahn_szego() {
  Outcome o;
  const double bound = lambda2_bound(1.0);
  const AnnulusUnion opt = optimal_annulus(1.0);
  double max_excess = -1.0;
  int spurious_equalities = 0;
  for (int i = 0; i < 1000; ++i) {
    const AnnulusUnion omega = family(i);
    const CheckReport r = check_krahn_szego(omega);
    max_excess = std::max(max_excess, r.lhs - bound);
    if (r.margin < 1e-9 && symmetric_difference(omega, opt) > kEqualitySymDiff) ++spurious_equalities;
  }
  const CheckReport at_opt = check_krahn_szego(opt);
  o.pass = max_excess <= 1e-6 && spurious_equalities == 0 && std::fabs(at_opt.margin) < 1e-9 &&
           at_opt.equality_case_detected;
  o.detail = fmt("bound %.10f, max lambda2 - bound = %.3e, optimal annulus margin %.1e", bound, max_excess,
                 at_opt.margin);
  o.detail += ", spurious equalities " + std::to_string(spurious_equalities);
  return o;
}

Outcome sum_bound() {
  Outcome o;
  double worst = 1.0;
  double ball_err = 0.0;
  double identity_err = 0.0;
  for (int K = 1; K <= 6; ++K) {
    double rhs = 0.0;
    for (int k = 0; k < K; ++k) rhs += specfun::reg_lower_gamma(k, 1.0);
    identity_err = std::max(identity_err, std::fabs(rhs - specfun::g_K(K, 1.0)));
    ball_err = std::max(ball_err, std::fabs(sum_top(AnnulusUnion::ball(1.0), K) - rhs));
    for (int i = 0; i < 1000; ++i) worst = std::min(worst, rhs + 1e-9 - sum_top(family(i), K));
  }
  o.pass = worst >= 0.0 && ball_err <= 1e-12 && identity_err <= 1e-13;
  o.detail = fmt("min slack %.3e, ball error %.1e, g_K identity error %.1e", worst, ball_err, identity_err);
  return o;
}

Outcome trace_identity() {
  Outcome o;
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const AnnulusUnion omega = family(i);
    worst = std::max(worst, std::fabs(trace_phi(omega, [](double t) { return t; }, {1.0, 1.0}, 1e-12) -
                                      omega.measure()));
  }
  o.pass = worst <= 1e-8;
  o.detail = fmt("max |sum mode_mass - |Omega|| = %.3e", worst);
  return o;
}

Outcome trace_schatten() {
  struct Phi {
    std::function<double(double)> f;
    PhiModulus mod;
  };
  const std::vector<Phi> phis = {{[](double t) { return t * t; }, {1.0, 2.0}},
                                 {[](double t) { return t * t * t; }, {1.0, 3.0}},
                                 {[](double t) { return -std::sqrt(t); }, {1.0, 0.5}}};
  const std::vector<double> ps = {0.5, 1.5, 2.0, 3.0};
  const AnnulusUnion ball = AnnulusUnion::ball(1.0);
  std::vector<double> phi_ball, p_ball;
  for (const auto& p : phis) phi_ball.push_back(trace_phi(ball, p.f, p.mod));
  for (double p : ps) p_ball.push_back(schatten(ball, p));

  Outcome o;
  double min_margin = 1.0;
  double min_strict = 1.0;
  int strict_failures = 0;
  for (int i = 0; i < 200; ++i) {
    const AnnulusUnion omega = family(i);
    const bool far = symmetric_difference(omega, ball) > 1e-3;
    auto record = [&](double margin) {
      min_margin = std::min(min_margin, margin);
      if (far) {
        min_strict = std::min(min_strict, margin);
        if (!(margin > 1e-10)) ++strict_failures;
      }
    };
    for (std::size_t j = 0; j < phis.size(); ++j) record(phi_ball[j] - trace_phi(omega, phis[j].f, phis[j].mod));
    for (std::size_t j = 0; j < ps.size(); ++j) {
      const double v = schatten(omega, ps[j]);
      record(ps[j] > 1.0 ? p_ball[j] - v : v - p_ball[j]);
    }
  }
  o.pass = min_margin >= 0.0 && strict_failures == 0;
  o.detail = fmt("min margin %.3e, min margin off the ball %.3e", min_margin, min_strict);
  o.detail += ", non-strict " + std::to_string(strict_failures);
  return o;
}

Outcome reduction_chain() {
  Outcome o;
  int bad_steps = 0;
  double min_strict_gain = 1.0;
  double terminal = 0.0;
  double gain_err = 0.0;
  for (double s : {0.5, 1.0, 3.0}) {
    for (int i = 0; i < 200; ++i) {
      std::mt19937_64 rng(stream(6, static_cast<std::uint64_t>(i)));
      const int K = 1 + static_cast<int>(rng() % 5);
      std::vector<int> pool(21);
      for (int k = 0; k <= 20; ++k) pool[static_cast<std::size_t>(k)] = k;
      std::shuffle(pool.begin(), pool.end(), rng);
      std::vector<int> idx(pool.begin(), pool.begin() + K);
      std::sort(idx.begin(), idx.end());
      const auto c = reduce_chain(IndexVector(idx), s);
      // Steps are judged on the cancellation-free gain; the stored integrals
      // carry ~1e-13 rounding, more than the smallest true increments.
      for (std::size_t j = 0; j + 1 < c.size(); ++j) {
        const double gain = c[j + 1].gain;
        const bool strict = c[j].leading > 0 || c[j + 1].alpha.is_leading();
        if (strict) min_strict_gain = std::min(min_strict_gain, gain);
        if (strict ? !(gain > 0.0) : gain < 0.0) ++bad_steps;
        gain_err = std::max(gain_err, std::fabs(gain - (c[j + 1].integral - c[j].integral)));
      }
      terminal = std::max(terminal, std::fabs(c.back().integral - specfun::g_K(K, s)));
    }
  }
  double identity = 0.0;
  for (int k = 1; k <= 30; ++k) {
    const WeightProfile profile(IndexVector({k}));
    for (int j = 1; j <= 20; ++j) {
      const AnnulusUnion e = profile.superlevel_at(profile.max_value() * j / 21.0);
      identity = std::max(identity, std::fabs(mode_mass(e, k) - mode_mass(e, k - 1)));
    }
  }
  o.pass = bad_steps == 0 && gain_err <= 1e-12 && terminal <= 1e-9 && identity <= 1e-10;
  o.detail = fmt("terminal error %.3e, shift identity error %.3e, min strict gain %.3e", terminal, identity,
                 min_strict_gain);
  o.detail += fmt(", max |gain - integral step| %.2e", gain_err);
  o.detail += ", bad steps " + std::to_string(bad_steps);
  return o;
}

Outcome symmetry_breaking() {
  Outcome o;
  const SymmetryBreakingReport r = symmetry_breaking_experiment(0.2, 2.0, 64);
  const double radius = std::sqrt(0.1 / std::numbers::pi);
  const DiskUnion disks({{Complex(-2.0, 0.0), radius}, {Complex(2.0, 0.0), radius}});
  const double l2_80 = hermitian_eigenvalues(toeplitz_matrix(disks, 80, default_quad_order(80)))[1];
  const double drift = std::fabs(r.lambda2 - l2_80);
  o.pass = r.lambda2 > lambda2_bound(0.2) && std::fabs(r.lambda2 - (1.0 - std::exp(-0.1))) < 1e-4 &&
           r.lambda2 >= r.analytic_lower_bound - 1e-6 && drift < 1e-6;
  o.detail = fmt("lambda2 %.10f vs bound %.7f, |N=64 - N=80| = %.2e", r.lambda2, lambda2_bound(0.2), drift);
  o.detail += fmt(", lower bound %.10f", r.analytic_lower_bound);
  return o;
}

Outcome translation() {
  Outcome o;
  const double radius = std::sqrt(1.0 / std::numbers::pi);
  double worst = 0.0;
  for (double w : {0.5, 1.0, 2.0}) {
    const int N = 48 + static_cast<int>(std::ceil(8.0 * std::numbers::pi * w * w));
    const DiskUnion disk({{std::polar(w, 1.1), radius}});
    const auto eig = hermitian_eigenvalues(toeplitz_matrix(disk, N, default_quad_order(N)));
    for (int k = 0; k < 8; ++k)
      worst = std::max(worst, std::fabs(eig[static_cast<std::size_t>(k)] - specfun::reg_lower_gamma(k, 1.0)));
  }
  o.pass = worst <= 1e-6;
  o.detail = fmt("max top-8 eigenvalue error %.3e", worst);
  return o;
}

Outcome symbols() {
  Outcome o;
  double norm_err = 0.0;
  double min_margin = 1.0;
  int failures = 0;
  for (int K : {1, 2, 3}) {
    for (double p : {1.5, 2.0, 3.0}) {
      norm_err = std::max(norm_err, std::fabs(lp_norm(sigma_p(K, p, 1.0), p) - 1.0));
      for (int i = 0; i < 100; ++i) {
        const RadialSymbol raw = random_piecewise_symbol(stream(9, static_cast<std::uint64_t>(i)), 5, 8.0);
        const CheckReport r = check_optimal_symbol(raw.scaled(1.0 / lp_norm(raw, p)), K, p, 1.0);
        min_margin = std::min(min_margin, r.margin);
        if (!r.satisfied) ++failures;
      }
    }
  }
  const CheckReport inst = check_optimal_symbol(RadialSymbol::indicator(AnnulusUnion::ball(1.0)), 1, 2.0, 1.0);
  const bool inst_ok = std::fabs(inst.lhs - 0.6321206) < 5e-8 && std::fabs(inst.rhs - 0.7071068) < 5e-8 &&
                       inst.satisfied;
  double rearr_err = 0.0;
  for (int i = 0; i < 100; ++i) {
    const RadialSymbol sym = random_piecewise_symbol(stream(10, static_cast<std::uint64_t>(i)), 5, 8.0);
    const RadialSymbol star = rearrange(sym);
    for (double p : {1.0, 1.5, 2.0, 3.0}) {
      const double n = lp_norm(sym, p);
      rearr_err = std::max(rearr_err, std::fabs(lp_norm(star, p) - n) / std::max(1.0, n));
    }
  }
  o.pass = norm_err <= 1e-8 && failures == 0 && inst_ok && rearr_err <= 1e-8;
  o.detail = fmt("norm error %.2e, min optimal margin %.3e, rearrangement norm error %.2e", norm_err, min_margin,
                 rearr_err);
  o.detail += fmt(", instance %.7f <= %.7f", inst.lhs, inst.rhs);
  return o;
}

Outcome karamata() {
  const std::vector<std::function<double(double)>> convex = {
      [](double t) { return t * t; }, [](double t) { return t * t * t; },
      [](double t) { return -std::sqrt(t); }, [](double t) { return std::exp(t); },
      [](double t) { return std::max(0.0, t - 0.5); }};
  Outcome o;
  int failures = 0;
  double affine = 0.0;
  for (int i = 0; i < 10000; ++i) {
    std::mt19937_64 rng(stream(11, static_cast<std::uint64_t>(i)));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const std::size_t n = 2 + rng() % 10;
    std::vector<double> y(n);
    for (auto& v : y) v = 0.01 + 0.98 * unit(rng);
    std::sort(y.begin(), y.end(), std::greater<>());
    // Transfers from larger to smaller entries keep x majorized by y.
    std::vector<double> x = y;
    for (int t = 0; t < 6; ++t) {
      const std::size_t a = rng() % n, b = rng() % n;
      if (x[a] > x[b]) {
        const double d = 0.5 * (x[a] - x[b]) * unit(rng);
        x[a] -= d;
        x[b] += d;
      }
    }
    std::sort(x.begin(), x.end(), std::greater<>());
    if (!karamata_check(x, y, convex[static_cast<std::size_t>(i) % convex.size()]).satisfied) ++failures;
    affine = std::max(affine, std::fabs(karamata_check(x, y, [](double t) { return 3.0 * t - 1.0; }).margin));
  }
  o.pass = failures == 0 && affine < 1e-12;
  o.detail = "convex failures " + std::to_string(failures) + fmt(", max affine |margin| %.2e", affine);
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "faber-krahn ball value", 0.001, faber_krahn},
      {2, "krahn-szego lambda2 bound", 10, krahn_szego},
      {3, "top-K sum bound", 20, sum_bound},
      {4, "trace identity", 5, trace_identity},
      {5, "trace and schatten ordering", 30, trace_schatten},
      {6, "reduction chain", 30, reduction_chain},
      {7, "two-disk symmetry breaking", 60, symmetry_breaking},
      {8, "translation invariance", 60, translation},
      {9, "symbols", 60, symbols},
      {10, "karamata", 5, karamata},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    // Criterion 1 times its own computation; the others include setup.
    const bool in_time = c.id == 1 || secs < c.budget_s;
    const bool pass = o.pass && in_time;
    if (!pass) ++failed;
    std::printf("%s criterion %2d (%s): %s [%.3f s, budget %g s]\n", pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), secs, c.budget_s);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
