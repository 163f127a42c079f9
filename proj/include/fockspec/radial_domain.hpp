#pragma once

#include <cstdint>
#include <utility>
#include <initializer_list>
#include <vector>

namespace fockspec {

/// Half-open interval [a, b) in sigma-units (sigma = pi r^2).
struct Interval {
  double a = 0.0;
  double b = 0.0;

  double length() const { return b - a; }
  bool operator==(const Interval&) const = default;
};

/// Circularly symmetric planar set stored as disjoint sorted sigma-intervals.
/// The area of {a <= pi|z|^2 < b} is b - a, so measure() is the planar area.
///
/// Instances are only produced by normalize(), so the invariants
/// 0 <= a_0 < b_0 < a_1 < b_1 < ... and positive total measure always hold.
class AnnulusUnion {
 public:
  /// Merges overlapping or adjacent intervals, drops empty ones and sorts.
  /// Throws ErrorCode::kDegenerate when nothing of positive measure remains.
  static AnnulusUnion normalize(std::vector<std::pair<double, double>> raw);
  static AnnulusUnion normalize(const std::vector<Interval>& raw);
  static AnnulusUnion normalize(std::initializer_list<std::pair<double, double>> raw) {
    return normalize(std::vector<std::pair<double, double>>(raw));
  }

  static AnnulusUnion ball(double area);

  const std::vector<Interval>& pieces() const { return pieces_; }
  double measure() const;
  double outer() const { return pieces_.back().b; }
  bool is_ball() const { return pieces_.size() == 1 && pieces_.front().a == 0.0; }

  bool operator==(const AnnulusUnion&) const = default;

 private:
  explicit AnnulusUnion(std::vector<Interval> pieces) : pieces_(std::move(pieces)) {}

  std::vector<Interval> pieces_;
};

double measure(const AnnulusUnion& omega);

/// Measure of the symmetric difference of two radial sets.
double symmetric_difference(const AnnulusUnion& x, const AnnulusUnion& y);

/// Seeded random radial set of measure s with at most max_pieces components,
/// all inside [0, b_max]. Deterministic in the seed.
AnnulusUnion random_radial_set(std::uint64_t seed, double s, int max_pieces, double b_max);

}  // namespace fockspec
