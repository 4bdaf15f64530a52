#include "dnt/fuzzy.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace dnt {

namespace {

bool finite(double x) { return std::isfinite(x); }

/// Values of f's membership on the open interval (xl, xr), assuming the
/// interval contains no kink of f. Returns the limits from inside the
/// interval, so jumps at degenerate legs cannot leak in.
std::pair<double, double> leg_values(const TriangularFuzzyNumber& f, double xl, double xr) {
  const double xm = 0.5 * (xl + xr);
  if (xm <= f.a1 || xm >= f.a3) return {0.0, 0.0};
  if (xm < f.a2) {
    const double s = 1.0 / (f.a2 - f.a1);
    return {(xl - f.a1) * s, (xr - f.a1) * s};
  }
  const double s = 1.0 / (f.a3 - f.a2);
  return {(f.a3 - xl) * s, (f.a3 - xr) * s};
}

/// All x where either envelope can kink: the six triangle abscissae plus
/// every crossing of the two membership functions.
std::vector<double> envelope_grid(const TriangularFuzzyNumber& a, const TriangularFuzzyNumber& b) {
  std::vector<double> xs = {a.a1, a.a2, a.a3, b.a1, b.a2, b.a3};
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::vector<double> grid;
  grid.reserve(xs.size() * 2);
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const double xl = xs[i], xr = xs[i + 1];
    grid.push_back(xl);
    const auto [al, ar] = leg_values(a, xl, xr);
    const auto [bl, br] = leg_values(b, xl, xr);
    const double dl = al - bl, dr = ar - br;
    if (dl != 0.0 && dr != 0.0 && (dl > 0.0) != (dr > 0.0)) {
      const double xc = xl + (xr - xl) * (dl / (dl - dr));
      if (xc > xl && xc < xr) grid.push_back(xc);
    }
  }
  if (!xs.empty()) grid.push_back(xs.back());
  return grid;
}

template <typename Op>
std::vector<PiecewiseLinearCurve::Breakpoint> build_envelope(const TriangularFuzzyNumber& a,
                                                             const TriangularFuzzyNumber& b,
                                                             Op op) {
  const std::vector<double> grid = envelope_grid(a, b);
  std::vector<PiecewiseLinearCurve::Breakpoint> pts;
  pts.reserve(grid.size() + 2);
  auto push = [&pts](double x, double y) {
    if (!pts.empty() && pts.back().x == x && pts.back().y == y) return;
    pts.push_back({x, y});
  };
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const double xl = grid[i], xr = grid[i + 1];
    if (xl == xr) continue;
    const auto [al, ar] = leg_values(a, xl, xr);
    const auto [bl, br] = leg_values(b, xl, xr);
    push(xl, op(al, bl));
    push(xr, op(ar, br));
  }
  if (pts.empty()) {
    // Both inputs crisp: spikes carry no area, the envelope is flat zero.
    const double lo = std::min(a.a1, b.a1), hi = std::max(a.a3, b.a3);
    pts = {{lo, 0.0}, {hi, 0.0}};
  }
  return pts;
}

}  // namespace

TriangularFuzzyNumber::TriangularFuzzyNumber(double a1_, double a2_, double a3_)
    : a1(a1_), a2(a2_), a3(a3_) {
  if (!finite(a1) || !finite(a2) || !finite(a3))
    throw DomainError("triangular fuzzy number parameters must be finite");
  if (!(a1 <= a2 && a2 <= a3))
    throw DomainError("triangular fuzzy number requires a1 <= a2 <= a3");
}

double membership(const TriangularFuzzyNumber& f, double x) {
  if (x < f.a1 || x > f.a3) return 0.0;
  if (x == f.a2) return 1.0;
  if (x < f.a2) return (x - f.a1) / (f.a2 - f.a1);
  return (f.a3 - x) / (f.a3 - f.a2);
}

double graded_mean(const TriangularFuzzyNumber& f) { return (f.a1 + 4.0 * f.a2 + f.a3) / 6.0; }

double centroid_defuzzify(const TriangularFuzzyNumber& f) {
  if (f.is_crisp()) return f.a1;
  return (f.a1 + f.a2 + f.a3) / 3.0;
}

TriangularFuzzyNumber weighted_sum(std::span<const TriangularFuzzyNumber> fs,
                                   std::span<const double> ws) {
  if (fs.empty()) throw EmptyInput("weighted_sum: no fuzzy numbers given");
  if (fs.size() != ws.size()) throw LengthMismatch("weighted_sum: fuzzy numbers and weights differ in length");
  double a1 = 0.0, a2 = 0.0, a3 = 0.0;
  bool any_positive = false;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (ws[i] < 0.0) throw NegativeMass("weighted_sum: negative weight");
    if (ws[i] > 0.0) any_positive = true;
    a1 += ws[i] * fs[i].a1;
    a2 += ws[i] * fs[i].a2;
    a3 += ws[i] * fs[i].a3;
  }
  if (!any_positive) throw DegenerateWeight("weighted_sum: all weights are zero");
  return {a1, a2, a3};
}

PiecewiseLinearCurve::PiecewiseLinearCurve(std::vector<Breakpoint> points)
    : points_(std::move(points)) {
  if (points_.size() < 2) throw DomainError("piecewise-linear curve needs at least two breakpoints");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!finite(points_[i].x) || !finite(points_[i].y))
      throw DomainError("piecewise-linear curve breakpoints must be finite");
    if (points_[i].y < -1e-12 || points_[i].y > 1.0 + 1e-12)
      throw DomainError("piecewise-linear curve ordinates must lie in [0, 1]");
    if (i > 0 && points_[i].x < points_[i - 1].x)
      throw DomainError("piecewise-linear curve abscissae must be non-decreasing");
    if (i > 1 && points_[i].x == points_[i - 1].x && points_[i - 1].x == points_[i - 2].x)
      throw DomainError("piecewise-linear curve admits at most one jump per abscissa");
  }
}

PiecewiseLinearCurve PiecewiseLinearCurve::min_envelope(const TriangularFuzzyNumber& a,
                                                        const TriangularFuzzyNumber& b) {
  return PiecewiseLinearCurve(
      build_envelope(a, b, [](double x, double y) { return std::min(x, y); }));
}

PiecewiseLinearCurve PiecewiseLinearCurve::max_envelope(const TriangularFuzzyNumber& a,
                                                        const TriangularFuzzyNumber& b) {
  return PiecewiseLinearCurve(
      build_envelope(a, b, [](double x, double y) { return std::max(x, y); }));
}

double PiecewiseLinearCurve::area() const {
  double area = 0.0;
  for (std::size_t i = 0; i + 1 < points_.size(); ++i)
    area += 0.5 * (points_[i].y + points_[i + 1].y) * (points_[i + 1].x - points_[i].x);
  return area;
}

double intersection_area(const TriangularFuzzyNumber& a, const TriangularFuzzyNumber& b) {
  return PiecewiseLinearCurve::min_envelope(a, b).area();
}

double union_area(const TriangularFuzzyNumber& a, const TriangularFuzzyNumber& b) {
  const double area = PiecewiseLinearCurve::max_envelope(a, b).area();
  if (area <= 0.0) throw ZeroArea("union_area: both fuzzy numbers are crisp");
  return area;
}

double non_exclusive_degree(const TriangularFuzzyNumber& a, const TriangularFuzzyNumber& b) {
  const double ratio = intersection_area(a, b) / union_area(a, b);
  return std::clamp(ratio, 0.0, 1.0);
}

LinguisticScale::LinguisticScale(
    std::vector<std::pair<std::string, TriangularFuzzyNumber>> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) throw EmptyInput("linguistic scale must not be empty");
  labels_.reserve(entries_.size());
  for (const auto& [label, tfn] : entries_) {
    if (label.empty()) throw DomainError("linguistic scale labels must not be empty");
    if (std::find(labels_.begin(), labels_.end(), label) != labels_.end())
      throw DomainError("duplicate linguistic scale label: " + label);
    labels_.push_back(label);
  }
}

bool LinguisticScale::contains(std::string_view label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

const TriangularFuzzyNumber& LinguisticScale::at(std::string_view label) const {
  return entries_[index_of(label)].second;
}

std::size_t LinguisticScale::index_of(std::string_view label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end())
    throw UnknownLabel("label not on the linguistic scale: " + std::string(label));
  return static_cast<std::size_t>(it - labels_.begin());
}

}  // namespace dnt
