#include "fockspec/radial_domain.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "fockspec/error.hpp"

namespace fockspec {

AnnulusUnion AnnulusUnion::normalize(std::vector<std::pair<double, double>> raw) {
  std::vector<Interval> pieces;
  pieces.reserve(raw.size());
  for (auto [a, b] : raw) pieces.push_back({a, b});
  return normalize(pieces);
}

AnnulusUnion AnnulusUnion::normalize(const std::vector<Interval>& raw) {
  std::vector<Interval> pieces;
  for (const auto& iv : raw) {
    if (!std::isfinite(iv.a) || !std::isfinite(iv.b) || iv.a < 0.0 || iv.b < iv.a)
      fail(ErrorCode::kDomain, "interval must satisfy 0 <= a <= b < inf");
    if (iv.b > iv.a) pieces.push_back(iv);
  }
  std::sort(pieces.begin(), pieces.end(),
            [](const Interval& x, const Interval& y) { return x.a < y.a; });
  std::vector<Interval> merged;
  for (const auto& iv : pieces) {
    if (!merged.empty() && iv.a <= merged.back().b)
      merged.back().b = std::max(merged.back().b, iv.b);
    else
      merged.push_back(iv);
  }
  if (merged.empty()) fail(ErrorCode::kDegenerate, "domain has zero measure");
  return AnnulusUnion(std::move(merged));
}

AnnulusUnion AnnulusUnion::ball(double area) {
  if (!(area > 0.0) || !std::isfinite(area)) fail(ErrorCode::kDomain, "ball area must be positive");
  return AnnulusUnion({{0.0, area}});
}

double AnnulusUnion::measure() const {
  double total = 0.0;
  for (const auto& iv : pieces_) total += iv.length();
  return total;
}

double measure(const AnnulusUnion& omega) { return omega.measure(); }

double symmetric_difference(const AnnulusUnion& x, const AnnulusUnion& y) {
  // |X| + |Y| - 2|X n Y|, intersection by a merge sweep.
  double overlap = 0.0;
  const auto& p = x.pieces();
  const auto& q = y.pieces();
  std::size_t i = 0, j = 0;
  while (i < p.size() && j < q.size()) {
    const double lo = std::max(p[i].a, q[j].a);
    const double hi = std::min(p[i].b, q[j].b);
    if (hi > lo) overlap += hi - lo;
    if (p[i].b < q[j].b) ++i; else ++j;
  }
  return std::max(0.0, x.measure() + y.measure() - 2.0 * overlap);
}

AnnulusUnion random_radial_set(std::uint64_t seed, double s, int max_pieces, double b_max) {
  if (!(s > 0.0)) fail(ErrorCode::kDomain, "random_radial_set: s must be positive");
  if (!(s < b_max)) fail(ErrorCode::kDomain, "random_radial_set: need s < b_max");
  if (max_pieces < 1 || max_pieces > 64)
    fail(ErrorCode::kDomain, "random_radial_set: max_pieces must lie in [1, 64]");

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int m = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_pieces));

  // Piece lengths: random positive weights scaled to sum to s.
  std::vector<double> lengths(m);
  double wsum = 0.0;
  for (auto& w : lengths) wsum += (w = 0.05 + unit(rng));
  for (auto& w : lengths) w *= s / wsum;

  // Gaps: m+1 weights (leading gap may vanish) scaled to a random fraction of
  // the free room, biased towards compact sets.
  std::vector<double> gaps(m + 1);
  double gsum = 0.0;
  for (int i = 0; i <= m; ++i) {
    double w = 0.05 + unit(rng);
    if (i == 0 && unit(rng) < 0.25) w = 0.0;
    gsum += (gaps[i] = w);
  }
  const double u = unit(rng);
  const double room = (b_max - s) * u * u;
  for (auto& g : gaps) g *= room / gsum;

  std::vector<Interval> pieces;
  double cursor = 0.0;
  for (int i = 0; i < m; ++i) {
    cursor += gaps[i];
    const double a = cursor;
    cursor += lengths[i];
    pieces.push_back({a, std::min(cursor, b_max)});
  }
  // Fix the measure exactly against accumulated rounding on the last piece.
  double partial = 0.0;
  for (int i = 0; i + 1 < m; ++i) partial += pieces[i].length();
  pieces.back().b = pieces.back().a + (s - partial);
  return AnnulusUnion::normalize(pieces);
}

}  // namespace fockspec
