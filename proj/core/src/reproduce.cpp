#include "dnt/reproduce.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "dnt/dnumbers.hpp"
#include "dnt/pipeline.hpp"
#include "dnt/reference.hpp"

namespace dnt::reproduce {

namespace {

constexpr double kPrinted3 = 5e-4;   // half-ULP of three printed decimals
constexpr double kChained = 2e-3;    // chained results truncated below 0.001
constexpr double kDefuzz = 1e-3;
constexpr double kExactSum = 1e-9;
constexpr double kExactTable = 1e-12;

std::string fmt(double v, int decimals = 6) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

std::string labels_to_string(const std::vector<std::string>& labels) {
  std::string s = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) s += ", ";
    s += labels[i];
  }
  return s + "}";
}

class Runner {
 public:
  explicit Runner(const Options& options) : options_(options) {}

  std::vector<CheckResult> take() { return std::move(results_); }

  bool wants(const std::string& group) const {
    return !options_.only_group || *options_.only_group == group;
  }

  bool perturbed(const std::string& group) const {
    return options_.perturb_group && *options_.perturb_group == group;
  }

  void numeric(const std::string& group, const std::string& name, double expected, double actual,
               double tolerance) {
    const double tol = options_.tolerance_override.value_or(tolerance);
    const double delta = std::abs(expected - actual);
    results_.push_back(
        {group, name, fmt(expected), fmt(actual), delta, tol, delta <= tol});
  }

  void exact(const std::string& group, const std::string& name, const std::string& expected,
             const std::string& actual) {
    results_.push_back({group, name, expected, actual, 0.0, 0.0, expected == actual});
  }

 private:
  Options options_;
  std::vector<CheckResult> results_;
};

LinguisticScale nonexcl_scale(const Runner& r) {
  if (!r.perturbed("nonexcl")) return reference::scale();
  auto entries = reference::scale().entries();
  entries[0].second = {0.00, 0.00, 0.30};  // widen VP
  return LinguisticScale(std::move(entries));
}

void check_nonexcl(Runner& r) {
  const LinguisticScale scale = nonexcl_scale(r);
  const NonExclusivityMatrix m = build_nonexcl_from_scale(scale);
  const DFrame& frame = m.frame();
  for (const auto& e : reference::expected_scale_nonexcl())
    r.numeric("nonexcl", std::string("u(") + e.a + "," + e.b + ")", e.degree, m.base(e.a, e.b),
              kPrinted3);

  // Every remaining off-diagonal entry, X row and column included, is zero.
  int nonzero = 0;
  const std::size_t n = frame.size();
  const auto is_adjacent = [&](std::size_t i, std::size_t j) {
    return i < n && j < n && (i + 1 == j || j + 1 == i);
  };
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= n; ++j)
      if (i != j && !is_adjacent(i, j) && m.base(i, j) != 0.0) ++nonzero;
  r.exact("nonexcl", "all other off-diagonal entries zero", "0 nonzero",
          std::to_string(nonzero) + " nonzero");

  r.numeric("nonexcl", "u({VP,P},{MP,X})", reference::expected_powerset_extension(),
            extend_nonexcl(m, DFocalSet::of(frame, {"VP", "P"}),
                           DFocalSet::of(frame, {"MP", "X"})),
            kPrinted3);
}

void check_combine(Runner& r) {
  const auto& ex = reference::combination_example();
  DNumber d1 = ex.d1;
  if (r.perturbed("combine"))
    d1 = DNumber(ex.frame, {{{"a"}, 0.45}, {{"b"}, 0.2}, {{"a", "b"}, 0.1}, {{"X"}, 0.25}});

  r.numeric("combine", "K_D", ex.conflict, exclusive_conflict(d1, ex.d2, ex.matrix), kPrinted3);

  const DNumber combined = ecr_combine(d1, ex.d2, ex.matrix);
  for (const auto& [labels, mass] : ex.result)
    r.numeric("combine", "D(" + labels_to_string(labels) + ")", mass,
              combined.mass(DFocalSet::of(ex.frame, labels)), kPrinted3);

  double total = 0.0;
  for (const auto& [bits, mass] : combined.masses()) total += mass;
  r.numeric("combine", "result mass total", 1.0, total, kExactSum);

  // Routed product table, cell for cell.
  const auto table = ecr_product_table(d1, ex.d2, ex.matrix);
  std::map<std::pair<std::uint32_t, std::uint32_t>, const EcrProduct*> by_pair;
  for (const auto& cell : table) by_pair[{cell.left, cell.right}] = &cell;
  for (const auto& cell : ex.table) {
    const auto key = std::make_pair(DFocalSet::of(ex.frame, cell.left).bits(),
                                    DFocalSet::of(ex.frame, cell.right).bits());
    const std::string name = "table " + labels_to_string(cell.left) + " x " +
                             labels_to_string(cell.right);
    const auto it = by_pair.find(key);
    if (it == by_pair.end()) {
      r.exact("combine", name, "present", "missing");
      continue;
    }
    const std::string expected_target = labels_to_string(cell.target);
    const std::string actual_target =
        DFocalSet(ex.frame, it->second->target).to_string();
    // Normalize "{a, b}" vs "{a, b}" spacing: DFocalSet::to_string uses ", ".
    r.exact("combine", name + " target", expected_target, actual_target);
    r.numeric("combine", name + " value", cell.value, it->second->value, kExactTable);
  }
}

CriterionWeights weight_inputs(const Runner& r) {
  if (!r.perturbed("weights")) return reference::weights();
  auto entries = reference::weights().entries();
  entries[0].second = {0.53, 0.95, 1.00};
  return CriterionWeights(std::move(entries));
}

void check_weights(Runner& r) {
  const CriterionWeights w = weight_inputs(r);
  const auto& gms = reference::expected_graded_means();
  const auto& factors = reference::expected_weight_factors();
  for (std::size_t i = 0; i < w.size(); ++i)
    r.numeric("weights", "graded mean " + w.labels()[i], gms[i],
              graded_mean(w.entries()[i].second), kPrinted3);
  const auto normalized = normalize_weights(w);
  for (std::size_t i = 0; i < normalized.size(); ++i)
    r.numeric("weights", "weight factor " + normalized[i].first, factors[i],
              normalized[i].second, kPrinted3);
}

ScenarioSpec scenario_inputs(const Runner& r, const char* group) {
  ScenarioSpec spec = reference::dispute_scenario();
  if (r.perturbed(group)) {
    auto& votes = spec.cases[0].votes.at(group == std::string("fusion") ? "AS1" : "AS3").at("C1");
    votes[0] = group == std::string("fusion") ? "VP" : "VG";
  }
  return spec;
}

void check_fusion(Runner& r) {
  const ScenarioSpec spec = scenario_inputs(r, "fusion");
  const CaseColumn column = build_payoff_column(spec.cases[0], spec);
  const StrategyEvaluation& as1 = column.entries[0];
  const auto& chain = reference::expected_fusion_chain();
  const DFrame frame(spec.scale.labels());

  // Averaged operand of the weighted average combination.
  const auto weights = normalize_weights(spec.weights);
  std::vector<DNumber> cells;
  std::vector<double> ws;
  for (const auto& [criterion, d] : as1.per_criterion) cells.push_back(d);
  for (const auto& [label, value] : weights) ws.push_back(value);
  std::map<std::uint32_t, double> avg;
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (const auto& [bits, mass] : cells[i].masses()) avg[bits] += ws[i] * mass;
  const DNumber averaged(frame, std::move(avg));
  for (const auto& [label, mass] : chain.averaged)
    r.numeric("fusion", std::string("averaged D(") + label + ")", mass,
              averaged.mass(DFocalSet::of(frame, {label})), kPrinted3);

  for (const auto& [labels, mass] : chain.fused)
    r.numeric("fusion", "fused D(" + labels_to_string(labels) + ")", mass,
              as1.fused.mass(DFocalSet::of(frame, labels)), kChained);

  for (std::size_t i = 0; i < chain.distribution.size(); ++i)
    r.numeric("fusion", std::string("distribution ") + chain.distribution[i].first,
              chain.distribution[i].second, as1.distribution[i].second, kChained);

  r.numeric("fusion", "fuzzy payoff a1", chain.fuzzy_payoff.a1, as1.fuzzy_payoff.a1, kChained);
  r.numeric("fusion", "fuzzy payoff a2", chain.fuzzy_payoff.a2, as1.fuzzy_payoff.a2, kChained);
  r.numeric("fusion", "fuzzy payoff a3", chain.fuzzy_payoff.a3, as1.fuzzy_payoff.a3, kChained);
  r.numeric("fusion", "payoff", chain.payoff, as1.payoff, kDefuzz);
}

void check_column(Runner& r) {
  const ScenarioSpec spec = scenario_inputs(r, "column");
  const CaseColumn column = build_payoff_column(spec.cases[0], spec);
  const auto& expected = reference::expected_bs1_column();
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const auto& e = expected[i];
    const auto& actual = column.entries[i];
    r.numeric("column", std::string(e.strategy) + " fuzzy payoff a1", e.fuzzy_payoff.a1,
              actual.fuzzy_payoff.a1, kChained);
    r.numeric("column", std::string(e.strategy) + " fuzzy payoff a2", e.fuzzy_payoff.a2,
              actual.fuzzy_payoff.a2, kChained);
    r.numeric("column", std::string(e.strategy) + " fuzzy payoff a3", e.fuzzy_payoff.a3,
              actual.fuzzy_payoff.a3, kChained);
    r.numeric("column", std::string(e.strategy) + " payoff", e.payoff, actual.payoff, kChained);
  }
}

std::string cell_to_string(const BimatrixGame& g, const EquilibriumCell& cell) {
  return "(" + g.row_strategies()[cell.row] + ", " + g.col_strategies()[cell.col] + ")";
}

void check_one_game(Runner& r, const std::string& tag, const BimatrixGame& game,
                    const reference::RankingExpectation& ranks,
                    const reference::FrequencyExpectation& freqs) {
  const EquilibriumSet cells = pure_nash_equilibria(game);
  std::string rendered;
  for (const auto& cell : cells) {
    if (!rendered.empty()) rendered += " ";
    rendered += cell_to_string(game, cell);
  }
  const std::string expected = cell_to_string(game, reference::expected_equilibrium());
  r.exact("game", tag + " unique equilibrium", expected, rendered);

  const auto alpha = strategy_rankings(game, Player::row);
  const auto beta = strategy_rankings(game, Player::col);
  for (std::size_t opp = 0; opp < alpha.size(); ++opp)
    for (std::size_t i = 0; i < alpha[opp].size(); ++i)
      r.exact("game",
              tag + " Alpha rank " + game.row_strategies()[i] + " given " +
                  game.col_strategies()[opp],
              std::to_string(ranks.alpha[opp][i]), std::to_string(alpha[opp][i].rank));
  for (std::size_t opp = 0; opp < beta.size(); ++opp)
    for (std::size_t j = 0; j < beta[opp].size(); ++j)
      r.exact("game",
              tag + " Beta rank " + game.col_strategies()[j] + " given " +
                  game.row_strategies()[opp],
              std::to_string(ranks.beta[opp][j]), std::to_string(beta[opp][j].rank));

  const auto alpha_counts = best_response_frequency(game, Player::row);
  const auto beta_counts = best_response_frequency(game, Player::col);
  for (std::size_t i = 0; i < alpha_counts.size(); ++i)
    r.exact("game", tag + " best-response count " + game.row_strategies()[i],
            std::to_string(freqs.alpha[i]), std::to_string(alpha_counts[i]));
  for (std::size_t j = 0; j < beta_counts.size(); ++j)
    r.exact("game", tag + " best-response count " + game.col_strategies()[j],
            std::to_string(freqs.beta[j]), std::to_string(beta_counts[j]));
}

void check_game(Runner& r) {
  BimatrixGame game = reference::dispute_game();
  if (r.perturbed("game")) {
    auto payoffs = game.payoffs();
    payoffs[4][2].u1 = 0.5;  // flatten the (AS5, BS3) peak
    game = BimatrixGame(game.row_strategies(), game.col_strategies(), std::move(payoffs));
  }
  check_one_game(r, "dnt", game, reference::expected_rankings(),
                 reference::expected_frequencies());
  check_one_game(r, "topsis", reference::dispute_game_topsis(),
                 reference::expected_rankings_topsis(), reference::expected_frequencies_topsis());
}

}  // namespace

const std::vector<std::string>& group_names() {
  static const std::vector<std::string> names = {"nonexcl", "combine", "weights",
                                                 "fusion", "column",  "game"};
  return names;
}

std::vector<CheckResult> run_checks(const Options& options) {
  if (options.only_group) {
    const auto& names = group_names();
    if (std::find(names.begin(), names.end(), *options.only_group) == names.end())
      throw DomainError("unknown check group: " + *options.only_group);
  }
  Runner r(options);
  if (r.wants("nonexcl")) check_nonexcl(r);
  if (r.wants("combine")) check_combine(r);
  if (r.wants("weights")) check_weights(r);
  if (r.wants("fusion")) check_fusion(r);
  if (r.wants("column")) check_column(r);
  if (r.wants("game")) check_game(r);
  return r.take();
}

}  // namespace dnt::reproduce
