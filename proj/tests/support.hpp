#pragma once

// Shared helpers for the unit and acceptance suites: tolerance checks,
// deterministic random generators, and independent brute-force oracles.

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "dnt/dnumbers.hpp"
#include "dnt/dst.hpp"
#include "dnt/fuzzy.hpp"
#include "dnt/game.hpp"

namespace testsupport {

inline bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

/// Trapezoid quadrature of f over [lo, hi].
inline double integrate(const std::function<double(double)>& f, double lo, double hi,
                        int panels = 10000) {
  const double h = (hi - lo) / panels;
  double sum = 0.5 * (f(lo) + f(hi));
  for (int i = 1; i < panels; ++i) sum += f(lo + i * h);
  return sum * h;
}

/// Centroid of a membership function by numeric integration; the independent
/// oracle for the closed form.
inline double numeric_centroid(const dnt::TriangularFuzzyNumber& f, int panels = 10000) {
  const auto mu = [&f](double x) { return dnt::membership(f, x); };
  const auto xmu = [&f](double x) { return x * dnt::membership(f, x); };
  return integrate(xmu, f.a1, f.a3, panels) / integrate(mu, f.a1, f.a3, panels);
}

/// Random triangle, occasionally with a degenerate leg as real scales have.
inline dnt::TriangularFuzzyNumber random_tfn(std::mt19937& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double a = u(rng), b = u(rng), c = u(rng);
  if (a > b) std::swap(a, b);
  if (b > c) std::swap(b, c);
  if (a > b) std::swap(a, b);
  std::uniform_int_distribution<int> leg(0, 9);
  const int kind = leg(rng);
  if (kind == 0) b = a;       // vertical left leg
  else if (kind == 1) b = c;  // vertical right leg
  return {a, b, c};
}

/// Random BPA over the frame with up to `max_focals` focal elements.
inline dnt::BasicProbabilityAssignment random_bpa(const dnt::Frame& frame, std::mt19937& rng,
                                                  int max_focals = 4) {
  std::uniform_int_distribution<std::uint32_t> subset(1, frame.full_mask());
  std::uniform_int_distribution<int> count(1, max_focals);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  std::map<std::uint32_t, double> masses;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) masses[subset(rng)] += u(rng);
  double total = 0.0;
  for (const auto& [bits, m] : masses) total += m;
  for (auto& [bits, m] : masses) m /= total;
  return {frame, std::move(masses)};
}

/// Random D number over the frame; `allow_x` admits X-bearing focal sets
/// (the result is then possibly information-incomplete).
inline dnt::DNumber random_dnumber(const dnt::DFrame& frame, std::mt19937& rng,
                                   bool allow_x = true, int max_focals = 4) {
  const std::uint32_t mask = allow_x ? frame.full_mask() : frame.theta_mask();
  std::uniform_int_distribution<std::uint32_t> subset(1, mask);
  std::uniform_int_distribution<int> count(1, max_focals);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  std::map<std::uint32_t, double> masses;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) masses[subset(rng)] += u(rng);
  double total = 0.0;
  for (const auto& [bits, m] : masses) total += m;
  for (auto& [bits, m] : masses) m /= total;
  return {frame, std::move(masses)};
}

/// Random symmetric base matrix with unit diagonal over theta plus X.
inline dnt::NonExclusivityMatrix random_matrix(const dnt::DFrame& frame, std::mt19937& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const std::size_t n = frame.size() + 1;
  std::vector<std::vector<double>> base(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    base[i][i] = 1.0;
    for (std::size_t j = i + 1; j < n; ++j) base[i][j] = base[j][i] = u(rng);
  }
  return {frame, std::move(base)};
}

/// Random bimatrix game with integer-ish payoffs so ties occur.
inline dnt::BimatrixGame random_game(std::mt19937& rng, std::size_t max_side = 6) {
  std::uniform_int_distribution<std::size_t> side(1, max_side);
  std::uniform_int_distribution<int> pay(0, 9);
  const std::size_t p = side(rng), q = side(rng);
  std::vector<std::string> rows, cols;
  for (std::size_t i = 0; i < p; ++i) rows.push_back("R" + std::to_string(i));
  for (std::size_t j = 0; j < q; ++j) cols.push_back("C" + std::to_string(j));
  std::vector<std::vector<dnt::PayoffPair>> cells(p, std::vector<dnt::PayoffPair>(q));
  for (auto& row : cells)
    for (auto& cell : row) cell = {static_cast<double>(pay(rng)), static_cast<double>(pay(rng))};
  return {std::move(rows), std::move(cols), std::move(cells)};
}

/// Equilibria straight from the definition: re-verify both weak inequalities
/// for every cell by scanning the full strategy sets.
inline dnt::EquilibriumSet brute_force_equilibria(const dnt::BimatrixGame& g) {
  dnt::EquilibriumSet cells;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) {
      bool ok = true;
      for (std::size_t r = 0; r < g.rows() && ok; ++r)
        if (g.at(r, j).u1 > g.at(i, j).u1) ok = false;
      for (std::size_t c = 0; c < g.cols() && ok; ++c)
        if (g.at(i, c).u2 > g.at(i, j).u2) ok = false;
      if (ok) cells.push_back({i, j});
    }
  }
  return cells;
}

}  // namespace testsupport
