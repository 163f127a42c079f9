#include "fockspec/superlevel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fockspec/error.hpp"
#include "fockspec/radial_spectrum.hpp"
#include "fockspec/specfun.hpp"

namespace fockspec {

IndexVector::IndexVector(std::vector<int> indices) : indices_(std::move(indices)) {
  if (indices_.empty()) fail(ErrorCode::kDomain, "IndexVector must be nonempty");
  if (indices_.front() < 0) fail(ErrorCode::kDomain, "IndexVector entries must be nonnegative");
  for (std::size_t i = 1; i < indices_.size(); ++i)
    if (indices_[i] <= indices_[i - 1])
      fail(ErrorCode::kDomain, "IndexVector entries must be strictly increasing");
}

IndexVector IndexVector::leading(int K) {
  if (K < 1) fail(ErrorCode::kDomain, "IndexVector::leading: K must be positive");
  std::vector<int> idx(static_cast<std::size_t>(K));
  for (int i = 0; i < K; ++i) idx[static_cast<std::size_t>(i)] = i;
  return IndexVector(std::move(idx));
}

int IndexVector::leading_count() const {
  int ell = 0;
  while (ell < size() && indices_[static_cast<std::size_t>(ell)] == ell) ++ell;
  return ell;
}

namespace {

// e^{-x} * sum_j c_j x^j / j!; same sign as the polynomial.
double eval_poisson_basis(std::span<const double> c, double x) {
  double sum = 0.0;
  for (std::size_t j = 0; j < c.size(); ++j)
    if (c[j] != 0.0) sum += c[j] * specfun::poisson_term(static_cast<int>(j), x);
  return sum;
}

template <class F>
double bisect_sign_change(const F& f, double lo, double hi, double flo) {
  for (int it = 0; it < 2000; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::vector<double> poisson_basis_roots(std::span<const double> coeffs, double lo, double hi) {
  std::size_t n = coeffs.size();
  while (n > 0 && coeffs[n - 1] == 0.0) --n;
  if (n <= 1) return {};
  const auto poly = coeffs.first(n);
  const std::vector<double> turning = poisson_basis_roots(poly.subspan(1), lo, hi);

  std::vector<double> pts;
  pts.reserve(turning.size() + 2);
  pts.push_back(lo);
  pts.insert(pts.end(), turning.begin(), turning.end());
  pts.push_back(hi);

  const auto f = [&](double x) { return eval_poisson_basis(poly, x); };
  std::vector<double> roots;
  double fa = f(pts[0]);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double fb = f(pts[i + 1]);
    if (fa != 0.0 && fb != 0.0 && (fa < 0.0) != (fb < 0.0)) {
      roots.push_back(bisect_sign_change(f, pts[i], pts[i + 1], fa));
    } else if (fb == 0.0 && i + 2 < pts.size()) {
      roots.push_back(pts[i + 1]);
    }
    fa = fb;
  }
  return roots;
}

WeightProfile::WeightProfile(IndexVector alpha) : alpha_(std::move(alpha)) {
  const int top = alpha_.largest();
  std::vector<double> a(static_cast<std::size_t>(top) + 2, 0.0);
  for (int k : alpha_.indices()) a[static_cast<std::size_t>(k)] = 1.0;
  // u' = e^{-x} (q' - q): coefficient j is a_{j+1} - a_j in the x^j/j! basis.
  std::vector<double> slope(static_cast<std::size_t>(top) + 1);
  for (std::size_t j = 0; j < slope.size(); ++j) slope[j] = a[j + 1] - a[j];
  // u is decreasing beyond the largest index, so critical points lie below it.
  critical_ = poisson_basis_roots(slope, 0.0, top + 1.0);
  max_value_ = (*this)(0.0);
  for (double c : critical_) max_value_ = std::max(max_value_, (*this)(c));
}

double WeightProfile::operator()(double sigma) const { return u_alpha(alpha_, sigma); }

double WeightProfile::crossing(double t, double lo, double hi) const {
  const auto f = [&](double x) { return (*this)(x) - t; };
  return bisect_sign_change(f, lo, hi, f(lo));
}

AnnulusUnion WeightProfile::superlevel_at(double t) const {
  if (!(t > 0.0)) fail(ErrorCode::kDomain, "superlevel_at: level must be positive");
  if (t >= max_value_) fail(ErrorCode::kEmptySet, "superlevel_at: level at or above max u_alpha");

  std::vector<double> breaks{0.0};
  breaks.insert(breaks.end(), critical_.begin(), critical_.end());

  std::vector<double> cuts;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double fa = (*this)(breaks[i]) - t;
    const double fb = (*this)(breaks[i + 1]) - t;
    if (fa == 0.0) cuts.push_back(breaks[i]);
    if (fa != 0.0 && fb != 0.0 && (fa < 0.0) != (fb < 0.0))
      cuts.push_back(crossing(t, breaks[i], breaks[i + 1]));
  }
  // Final piece decreases to 0 on [last break, inf).
  const double last = breaks.back();
  if ((*this)(last) > t) {
    double hi = std::max(2.0 * last, 1.0);
    while ((*this)(hi) >= t) hi *= 2.0;
    cuts.push_back(crossing(t, last, hi));
  } else if ((*this)(last) == t) {
    cuts.push_back(last);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<Interval> pieces;
  double prev = 0.0;
  for (double c : cuts) {
    if (c > prev && (*this)(0.5 * (prev + c)) > t) pieces.push_back({prev, c});
    prev = c;
  }
  return AnnulusUnion::normalize(pieces);
}

double u_alpha(const IndexVector& alpha, double sigma) {
  double sum = 0.0;
  for (int k : alpha.indices()) sum += specfun::poisson_term(k, sigma);
  return sum;
}

AnnulusUnion superlevel_at(const IndexVector& alpha, double t) {
  return WeightProfile(alpha).superlevel_at(t);
}

LevelSetResult superlevel_of_measure(const WeightProfile& profile, double s) {
  if (!(s > 0.0) || !std::isfinite(s))
    fail(ErrorCode::kDomain, "superlevel_of_measure: measure must be positive");

  const auto measure_at = [&](double t) {
    return t >= profile.max_value() ? 0.0 : profile.superlevel_at(t).measure();
  };
  // Distribution function is continuous and decreasing in t; bisect in log t.
  double hi = profile.max_value();
  double lo = 0.5 * hi;
  while (measure_at(lo) < s) {
    lo *= 1e-3;
    if (lo < 1e-290) fail(ErrorCode::kConvergence, "superlevel_of_measure: level underflow");
  }
  double m_lo = measure_at(lo);
  double m_hi = 0.0;
  const double target = 1e-13 * std::max(1.0, s);
  for (int it = 0; it < 400 && m_lo - s > target; ++it) {
    const double mid = std::sqrt(lo) * std::sqrt(hi);
    if (mid <= lo || mid >= hi) break;
    const double m = measure_at(mid);
    if (m >= s) {
      lo = mid;
      m_lo = m;
    } else {
      hi = mid;
      m_hi = m;
    }
  }
  const double t = (m_lo - s <= s - m_hi) ? lo : hi;
  AnnulusUnion set = profile.superlevel_at(t);
  const double achieved = set.measure();
  return {t, std::move(set), achieved};
}

LevelSetResult superlevel_of_measure(const IndexVector& alpha, double s) {
  return superlevel_of_measure(WeightProfile(alpha), s);
}

namespace {

double integral_over(const IndexVector& alpha, const AnnulusUnion& set) {
  double total = 0.0;
  for (int k : alpha.indices()) total += mode_mass(set, k);
  return total;
}

}  // namespace

double bathtub_integral(const IndexVector& alpha, double s) {
  return integral_over(alpha, superlevel_of_measure(alpha, s).set);
}

IndexVector move(const IndexVector& alpha) {
  const int ell = alpha.leading_count();
  if (ell == alpha.size()) fail(ErrorCode::kPrecondition, "move: alpha is already (0, ..., K-1)");
  std::vector<int> next = alpha.indices();
  for (std::size_t n = static_cast<std::size_t>(ell); n < next.size(); ++n) --next[n];
  return IndexVector(std::move(next));
}

std::vector<ChainStep> reduce_chain(const IndexVector& alpha, double s) {
  std::vector<ChainStep> chain;
  IndexVector current = alpha;
  AnnulusUnion previous_set = AnnulusUnion::ball(s);
  for (;;) {
    const LevelSetResult level = superlevel_of_measure(current, s);
    ChainStep step{current, level.level_t, integral_over(current, level.set), current.leading_count(), 0.0};
    if (!chain.empty()) {
      // Gain = int_E (u' - u) + [int_E' u' - int_E u'], E the previous set.
      // The first part telescopes to endpoint Poisson terms for every shifted
      // index; the bracket is nonnegative by the bathtub principle.
      const IndexVector& before = chain.back().alpha;
      double shift = 0.0;
      for (int n = before.leading_count(); n < before.size(); ++n) {
        const int k = before.indices()[static_cast<std::size_t>(n)];
        for (const auto& piece : previous_set.pieces())
          shift += specfun::poisson_term(k, piece.b) - specfun::poisson_term(k, piece.a);
      }
      const double bracket = step.integral - integral_over(current, previous_set);
      step.gain = shift + std::max(0.0, bracket);
    }
    chain.push_back(step);
    previous_set = level.set;
    if (current.is_leading()) break;
    current = move(current);
  }
  return chain;
}

}  // namespace fockspec
