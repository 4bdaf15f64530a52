// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Every expected value and tolerance is pinned here; the brute-force oracles
// are local to this binary and independent of the library code they check.

#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "dnt/dnumbers.hpp"
#include "dnt/dst.hpp"
#include "dnt/fuzzy.hpp"
#include "dnt/game.hpp"
#include "dnt/pipeline.hpp"
#include "dnt/reference.hpp"
#include "support.hpp"

namespace {

int failures = 0;
int current_errors = 0;
std::string current_detail;

void expect(bool ok, const std::string& detail) {
  if (!ok) {
    ++current_errors;
    if (current_detail.empty()) current_detail = detail;
  }
}

void expect_close(double expected, double actual, double tol, const std::string& what) {
  expect(std::abs(expected - actual) <= tol,
         what + ": expected " + std::to_string(expected) + ", got " + std::to_string(actual) +
             " (tol " + std::to_string(tol) + ")");
}

void criterion(int number, const std::string& title, void (*body)()) {
  current_errors = 0;
  current_detail.clear();
  body();
  if (current_errors == 0) {
    std::printf("[PASS] criterion %d: %s\n", number, title.c_str());
  } else {
    ++failures;
    std::printf("[FAIL] criterion %d: %s — %d check(s) failed, first: %s\n", number,
                title.c_str(), current_errors, current_detail.c_str());
  }
}

// ---------------------------------------------------------------------------

void criterion1_nonexcl_matrix() {
  const auto m = dnt::build_nonexcl_from_scale(dnt::reference::scale());
  for (const auto& e : dnt::reference::expected_scale_nonexcl())
    expect_close(e.degree, m.base(e.a, e.b), 5e-4,
                 std::string("u(") + e.a + "," + e.b + ")");
  const std::size_t n = m.frame().size();
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= n; ++j) {
      const bool adjacent = i < n && j < n && (i + 1 == j || j + 1 == i);
      if (i != j && !adjacent)
        expect(m.base(i, j) == 0.0, "off-diagonal entry (" + std::to_string(i) + "," +
                                        std::to_string(j) + ") must be exactly 0");
    }
  expect_close(0.140,
               dnt::extend_nonexcl(m, dnt::DFocalSet::of(m.frame(), {"VP", "P"}),
                                   dnt::DFocalSet::of(m.frame(), {"MP", "X"})),
               5e-4, "u({VP,P},{MP,X})");
}

void criterion2_combination() {
  const auto& ex = dnt::reference::combination_example();
  expect_close(0.423, dnt::exclusive_conflict(ex.d1, ex.d2, ex.matrix), 5e-4, "K_D");

  const dnt::DNumber combined = dnt::ecr_combine(ex.d1, ex.d2, ex.matrix);
  for (const auto& [labels, mass] : ex.result) {
    std::string name = "D({";
    for (const auto& l : labels) name += l + ",";
    expect_close(mass, combined.mass(dnt::DFocalSet::of(ex.frame, labels)), 5e-4, name + "})");
  }
  double total = 0.0;
  for (const auto& [bits, mass] : combined.masses()) total += mass;
  expect_close(1.0, total, 1e-9, "result mass total");

  const auto table = dnt::ecr_product_table(ex.d1, ex.d2, ex.matrix);
  expect(table.size() == 16, "product table must have 16 cells");
  for (const auto& cell : ex.table) {
    const std::uint32_t left = dnt::DFocalSet::of(ex.frame, cell.left).bits();
    const std::uint32_t right = dnt::DFocalSet::of(ex.frame, cell.right).bits();
    const std::uint32_t target = dnt::DFocalSet::of(ex.frame, cell.target).bits();
    bool matched = false;
    for (const auto& produced : table)
      if (produced.left == left && produced.right == right)
        matched = produced.target == target && std::abs(produced.value - cell.value) <= 1e-12;
    expect(matched, "product table cell mismatch");
  }
}

void criterion3_weight_chain() {
  const auto w = dnt::reference::weights();
  const auto& gms = dnt::reference::expected_graded_means();
  for (std::size_t i = 0; i < w.size(); ++i)
    expect_close(gms[i], dnt::graded_mean(w.entries()[i].second), 5e-4,
                 "graded mean " + w.labels()[i]);
  const auto factors = dnt::normalize_weights(w);
  const auto& expected = dnt::reference::expected_weight_factors();
  for (std::size_t i = 0; i < factors.size(); ++i)
    expect_close(expected[i], factors[i].second, 5e-4, "weight factor " + factors[i].first);
}

void criterion4_fusion_chain() {
  const dnt::ScenarioSpec spec = dnt::reference::dispute_scenario();
  const dnt::CaseColumn column = dnt::build_payoff_column(spec.cases[0], spec);
  const auto& as1 = column.entries[0];
  const dnt::DFrame frame(spec.scale.labels());
  const auto& chain = dnt::reference::expected_fusion_chain();

  const auto weights = dnt::normalize_weights(spec.weights);
  std::map<std::uint32_t, double> avg;
  for (std::size_t i = 0; i < as1.per_criterion.size(); ++i)
    for (const auto& [bits, mass] : as1.per_criterion[i].second.masses())
      avg[bits] += weights[i].second * mass;
  const dnt::DNumber averaged(frame, std::move(avg));
  for (const auto& [label, mass] : chain.averaged)
    expect_close(mass, averaged.mass(dnt::DFocalSet::of(frame, {label})), 5e-4,
                 std::string("averaged mass ") + label);

  for (const auto& [labels, mass] : chain.fused)
    expect_close(mass, as1.fused.mass(dnt::DFocalSet::of(frame, labels)), 2e-3, "fused mass");

  for (std::size_t i = 0; i < chain.distribution.size(); ++i)
    expect_close(chain.distribution[i].second, as1.distribution[i].second, 2e-3,
                 std::string("distribution ") + chain.distribution[i].first);

  expect_close(chain.fuzzy_payoff.a1, as1.fuzzy_payoff.a1, 2e-3, "fuzzy payoff a1");
  expect_close(chain.fuzzy_payoff.a2, as1.fuzzy_payoff.a2, 2e-3, "fuzzy payoff a2");
  expect_close(chain.fuzzy_payoff.a3, as1.fuzzy_payoff.a3, 2e-3, "fuzzy payoff a3");
  expect_close(chain.payoff, as1.payoff, 1e-3, "defuzzified payoff");
}

void criterion5_payoff_column() {
  const dnt::ScenarioSpec spec = dnt::reference::dispute_scenario();
  const dnt::CaseColumn column = dnt::build_payoff_column(spec.cases[0], spec);
  const auto& expected = dnt::reference::expected_bs1_column();
  for (std::size_t i = 0; i < expected.size(); ++i)
    expect_close(expected[i].payoff, column.entries[i].payoff, 2e-3,
                 std::string("payoff ") + expected[i].strategy);
}

void criterion6_equilibria() {
  const dnt::BimatrixGame main_game = dnt::reference::dispute_game();
  const auto cells = dnt::pure_nash_equilibria(main_game);
  expect(cells.size() == 1, "framework matrix must have a unique pure equilibrium");
  expect(!cells.empty() && cells[0] == dnt::EquilibriumCell{4, 2},
         "framework equilibrium must be (AS5, BS3)");
  expect(testsupport::brute_force_equilibria(main_game) == cells,
         "brute-force check must confirm the framework equilibrium");

  const dnt::BimatrixGame baseline = dnt::reference::dispute_game_topsis();
  const auto baseline_cells = dnt::pure_nash_equilibria(baseline);
  expect(!baseline_cells.empty() && baseline_cells[0] == dnt::EquilibriumCell{4, 2},
         "baseline equilibrium must be (AS5, BS3)");
  expect(testsupport::brute_force_equilibria(baseline) == baseline_cells,
         "brute-force check must confirm the baseline equilibrium");
}

void criterion7_rankings_and_frequencies() {
  const dnt::BimatrixGame g1 = dnt::reference::dispute_game();
  const auto& r1 = dnt::reference::expected_rankings();
  const auto alpha1 = dnt::strategy_rankings(g1, dnt::Player::row);
  const auto beta1 = dnt::strategy_rankings(g1, dnt::Player::col);
  for (std::size_t opp = 0; opp < alpha1.size(); ++opp)
    for (std::size_t i = 0; i < alpha1[opp].size(); ++i)
      expect(alpha1[opp][i].rank == r1.alpha[opp][i], "framework Alpha ranking mismatch");
  for (std::size_t opp = 0; opp < beta1.size(); ++opp)
    for (std::size_t j = 0; j < beta1[opp].size(); ++j)
      expect(beta1[opp][j].rank == r1.beta[opp][j], "framework Beta ranking mismatch");

  const dnt::BimatrixGame g2 = dnt::reference::dispute_game_topsis();
  const auto& r2 = dnt::reference::expected_rankings_topsis();
  const auto alpha2 = dnt::strategy_rankings(g2, dnt::Player::row);
  const auto beta2 = dnt::strategy_rankings(g2, dnt::Player::col);
  for (std::size_t opp = 0; opp < alpha2.size(); ++opp)
    for (std::size_t i = 0; i < alpha2[opp].size(); ++i)
      expect(alpha2[opp][i].rank == r2.alpha[opp][i], "baseline Alpha ranking mismatch");
  for (std::size_t opp = 0; opp < beta2.size(); ++opp)
    for (std::size_t j = 0; j < beta2[opp].size(); ++j)
      expect(beta2[opp][j].rank == r2.beta[opp][j], "baseline Beta ranking mismatch");

  expect(dnt::best_response_frequency(g1, dnt::Player::row) == std::vector<int>{1, 1, 0, 0, 2},
         "framework Alpha best-response counts (AS5 twice)");
  expect(dnt::best_response_frequency(g1, dnt::Player::col) == std::vector<int>{0, 0, 3, 2},
         "framework Beta best-response counts (BS3 three times)");
  expect(dnt::best_response_frequency(g2, dnt::Player::col) == std::vector<int>{0, 0, 1, 4},
         "baseline Beta best-response counts (BS4 four times)");
}

void criterion8_property_suites() {
  // Combination degenerates to Dempster's rule on exclusive frames.
  {
    const dnt::Frame cf({"a", "b", "c"});
    const dnt::DFrame f({"a", "b", "c"});
    const auto zero = dnt::NonExclusivityMatrix::exclusive(f);
    std::mt19937 rng(101);
    int compared = 0;
    for (int i = 0; i < 1000; ++i) {
      const auto m1 = testsupport::random_bpa(cf, rng);
      const auto m2 = testsupport::random_bpa(cf, rng);
      try {
        const auto classical = dnt::dempster_combine(m1, m2);
        const auto modern = dnt::ecr_combine(dnt::as_dnumber(m1), dnt::as_dnumber(m2), zero);
        ++compared;
        expect(classical.focal_count() == modern.focal_count(),
               "degeneracy: focal support mismatch");
        for (const auto& [bits, mass] : classical.masses())
          expect(std::abs(modern.mass_bits(bits) - mass) < 1e-9,
                 "degeneracy: per-focal-set delta must stay below 1e-9");
      } catch (const dnt::TotalConflict&) {
      }
    }
    expect(compared > 500, "degeneracy: too few comparable samples");
  }

  // Commutativity and mass normalization on random D-number pairs.
  {
    const dnt::DFrame f({"p", "q", "r"});
    std::mt19937 rng(103);
    for (int i = 0; i < 1000; ++i) {
      const auto m = testsupport::random_matrix(f, rng);
      const auto a = testsupport::random_dnumber(f, rng);
      const auto b = testsupport::random_dnumber(f, rng);
      const auto x = dnt::ecr_combine(a, b, m);
      const auto y = dnt::ecr_combine(b, a, m);
      expect(x.masses() == y.masses(), "combination must be commutative");
      double total = 0.0;
      for (const auto& [bits, mass] : x.masses()) total += mass;
      expect(std::abs(total - 1.0) <= 1e-9, "combined masses must sum to 1");
    }
  }

  // Belief <= pignistic mass <= plausibility on information-complete inputs.
  {
    const dnt::DFrame f({"p", "q", "r"});
    std::mt19937 rng(107);
    for (int i = 0; i < 1000; ++i) {
      const auto m = testsupport::random_matrix(f, rng);
      const auto d = testsupport::random_dnumber(f, rng, /*allow_x=*/false);
      const auto dist = dnt::d_ppt(d);
      std::uniform_int_distribution<std::uint32_t> bits(1, f.theta_mask());
      const std::uint32_t a = bits(rng);
      double mass = 0.0;
      for (std::size_t k = 0; k < f.size(); ++k)
        if (a & (1u << k)) mass += dist[k].second;
      expect(dnt::d_bel(d, dnt::DFocalSet(f, a)) <= mass + 1e-12,
             "belief must not exceed pignistic mass");
      expect(mass <= dnt::d_pl(d, m, dnt::DFocalSet(f, a)) + 1e-12,
             "pignistic mass must not exceed plausibility");
    }
  }

  // Pure equilibria equal the brute-force definition check.
  {
    std::mt19937 rng(109);
    for (int i = 0; i < 500; ++i) {
      const auto g = testsupport::random_game(rng, 6);
      expect(dnt::pure_nash_equilibria(g) == testsupport::brute_force_equilibria(g),
             "equilibria must match the brute-force oracle");
    }
  }

  // Centroid closed form against quadrature.
  {
    std::mt19937 rng(113);
    for (int i = 0; i < 1000; ++i) {
      const auto f = testsupport::random_tfn(rng);
      if (f.is_crisp()) continue;
      expect(std::abs(dnt::centroid_defuzzify(f) - testsupport::numeric_centroid(f)) < 1e-6,
             "centroid closed form must match numeric integration");
    }
  }

  // Exact area identity.
  {
    std::mt19937 rng(127);
    for (int i = 0; i < 1000; ++i) {
      const auto a = testsupport::random_tfn(rng);
      const auto b = testsupport::random_tfn(rng);
      if (a.is_crisp() && b.is_crisp()) continue;
      const double identity = dnt::union_area(a, b) + dnt::intersection_area(a, b) -
                              (a.area() + b.area());
      expect(std::abs(identity) < 1e-12, "area identity must hold to 1e-12");
    }
  }
}

}  // namespace

int main() {
  criterion(1, "non-exclusivity matrix of the seven-grade scale", criterion1_nonexcl_matrix);
  criterion(2, "two-source combination: conflict, masses, product table", criterion2_combination);
  criterion(3, "criterion weight chain: graded means and factors", criterion3_weight_chain);
  criterion(4, "fusion chain for AS1 given BS1", criterion4_fusion_chain);
  criterion(5, "payoff column from raw votes (BS1 case)", criterion5_payoff_column);
  criterion(6, "pure equilibria of both payoff matrices, brute-force confirmed",
            criterion6_equilibria);
  criterion(7, "strategy rankings and best-response counts", criterion7_rankings_and_frequencies);
  criterion(8, "property suites: degeneracy, commutativity, bounds, oracles",
            criterion8_property_suites);

  if (failures == 0) {
    std::printf("all 8 criteria passed\n");
    return 0;
  }
  std::printf("%d criteria FAILED\n", failures);
  return 1;
}
