#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dnt/errors.hpp"

namespace dnt {

/// Triangular fuzzy number (a1, a2, a3): membership rises linearly from
/// (a1, 0) to the peak (a2, 1) and falls back to (a3, 0).
///
/// a1 <= a2 <= a3 with equality admitted; a degenerate leg (a1 == a2 or
/// a2 == a3) is a jump and membership at the shared endpoint is 1.
struct TriangularFuzzyNumber {
  double a1;
  double a2;
  double a3;

  TriangularFuzzyNumber(double a1, double a2, double a3);

  static TriangularFuzzyNumber crisp(double c) { return {c, c, c}; }

  bool is_crisp() const { return a1 == a3; }

  /// Area under the membership triangle. Zero for a crisp value.
  double area() const { return 0.5 * (a3 - a1); }

  bool operator==(const TriangularFuzzyNumber&) const = default;
};

/// Membership degree of x. Exactly 1 at the peak, 0 outside [a1, a3].
double membership(const TriangularFuzzyNumber& f, double x);

/// Crispification (a1 + 4*a2 + a3) / 6.
double graded_mean(const TriangularFuzzyNumber& f);

/// Center-of-mass crispification, (a1 + a2 + a3) / 3 for a triangle.
/// A crisp value defuzzifies to itself.
double centroid_defuzzify(const TriangularFuzzyNumber& f);

/// Componentwise weighted sum: (Σw·a1, Σw·a2, Σw·a3).
TriangularFuzzyNumber weighted_sum(std::span<const TriangularFuzzyNumber> fs,
                                   std::span<const double> ws);

/// Piecewise-linear curve over [0,1]-valued ordinates. The exact carrier for
/// min/max envelopes of two triangular membership functions: every kink,
/// including leg crossings, is a breakpoint. x is non-decreasing; a repeated
/// x encodes a jump produced by a degenerate triangle leg.
class PiecewiseLinearCurve {
 public:
  struct Breakpoint {
    double x;
    double y;
    bool operator==(const Breakpoint&) const = default;
  };

  explicit PiecewiseLinearCurve(std::vector<Breakpoint> points);

  /// Pointwise min of the two membership functions.
  static PiecewiseLinearCurve min_envelope(const TriangularFuzzyNumber& a,
                                           const TriangularFuzzyNumber& b);
  /// Pointwise max of the two membership functions.
  static PiecewiseLinearCurve max_envelope(const TriangularFuzzyNumber& a,
                                           const TriangularFuzzyNumber& b);

  /// Exact trapezoid area under the curve.
  double area() const;

  const std::vector<Breakpoint>& breakpoints() const { return points_; }

 private:
  std::vector<Breakpoint> points_;
};

/// Area under min(mu_A, mu_B). Zero when the supports do not overlap.
double intersection_area(const TriangularFuzzyNumber& a, const TriangularFuzzyNumber& b);

/// Area under max(mu_A, mu_B). Throws ZeroArea when both inputs are crisp.
double union_area(const TriangularFuzzyNumber& a, const TriangularFuzzyNumber& b);

/// Overlap ratio intersection_area / union_area in [0, 1]. Symmetric;
/// 1 exactly when the two envelopes coincide with positive area.
double non_exclusive_degree(const TriangularFuzzyNumber& a, const TriangularFuzzyNumber& b);

/// An ordered association of linguistic grade labels with triangular fuzzy
/// numbers, e.g. VP..VG on a seven-grade scale. Order is the semantic grade
/// order and is preserved everywhere downstream.
class LinguisticScale {
 public:
  LinguisticScale(std::vector<std::pair<std::string, TriangularFuzzyNumber>> entries);

  std::size_t size() const { return entries_.size(); }
  const std::vector<std::pair<std::string, TriangularFuzzyNumber>>& entries() const {
    return entries_;
  }
  const std::vector<std::string>& labels() const { return labels_; }

  bool contains(std::string_view label) const;
  /// Throws UnknownLabel for a label outside the scale.
  const TriangularFuzzyNumber& at(std::string_view label) const;
  /// Position of the label in grade order; throws UnknownLabel.
  std::size_t index_of(std::string_view label) const;

  bool operator==(const LinguisticScale&) const = default;

 private:
  std::vector<std::pair<std::string, TriangularFuzzyNumber>> entries_;
  std::vector<std::string> labels_;
};

}  // namespace dnt
