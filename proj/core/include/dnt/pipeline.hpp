#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dnt/dnumbers.hpp"
#include "dnt/errors.hpp"
#include "dnt/fuzzy.hpp"
#include "dnt/game.hpp"

namespace dnt {

/// Fuzzy importance weights per decision criterion, in declared order.
class CriterionWeights {
 public:
  explicit CriterionWeights(std::vector<std::pair<std::string, TriangularFuzzyNumber>> entries);

  std::size_t size() const { return entries_.size(); }
  const std::vector<std::pair<std::string, TriangularFuzzyNumber>>& entries() const {
    return entries_;
  }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  std::vector<std::pair<std::string, TriangularFuzzyNumber>> entries_;
  std::vector<std::string> labels_;
};

/// One evaluation matrix: every strategy of `player` rated on every criterion
/// by each decision maker, conditioned on the opponent playing `given`.
struct EvaluationCase {
  std::string player;
  std::string given;
  /// votes[strategy][criterion] = one linguistic label per decision maker.
  std::map<std::string, std::map<std::string, std::vector<std::string>>> votes;
  /// Optional per-decision-maker weights; equal importance when absent.
  std::optional<std::vector<double>> dm_weights;

  std::string id() const { return player + "|" + given; }
};

/// Full problem statement: two players with their strategy sets, the shared
/// linguistic scale and criterion weights, and the evaluation cases.
struct ScenarioSpec {
  std::string row_player;
  std::string col_player;
  std::vector<std::string> row_strategies;
  std::vector<std::string> col_strategies;
  LinguisticScale scale;
  CriterionWeights weights;
  std::vector<EvaluationCase> cases;

  const EvaluationCase* find_case(const std::string& player, const std::string& given) const;
};

/// Crispifies the fuzzy weights by graded mean and normalizes to sum 1,
/// in declared criterion order. Throws DegenerateWeight on a non-positive
/// graded mean.
std::vector<std::pair<std::string, double>> normalize_weights(const CriterionWeights& w);

/// Turns every vote cell of a case into a D number over the scale frame.
/// Keyed (strategy, criterion); deterministic order.
std::map<std::pair<std::string, std::string>, DNumber> case_to_dnumber_matrix(
    const EvaluationCase& c, const LinguisticScale& scale);

/// Fuses one strategy's per-criterion D numbers by weighted average
/// combination, folding in declared criterion order.
DNumber fuse_strategy(const std::vector<DNumber>& cells, const std::vector<double>& weights,
                      const NonExclusivityMatrix& m);

/// Full payoff chain for one D number: pignistic distribution, fuzzy payoff
/// as the distribution-weighted sum of scale triangles, then centroid
/// defuzzification.
double dnumber_to_payoff(const DNumber& d, const LinguisticScale& scale);

/// Audit trail for one (strategy, conditioning strategy) cell.
struct StrategyEvaluation {
  std::string strategy;
  std::vector<std::pair<std::string, DNumber>> per_criterion;  // declared order
  DNumber fused;
  std::vector<std::pair<std::string, double>> distribution;  // pignistic, theta order
  TriangularFuzzyNumber fuzzy_payoff;
  double payoff;
};

/// One evaluated case: the payoff of each of the player's strategies given
/// a fixed opponent strategy, with all intermediates.
struct CaseColumn {
  std::string player;
  std::string given;
  std::vector<StrategyEvaluation> entries;  // in the player's strategy order
};

/// Evaluates one case end to end. Validates the case against the scenario.
CaseColumn build_payoff_column(const EvaluationCase& c, const ScenarioSpec& spec);

/// Assembles the real-valued game from full case coverage: u1 from the row
/// player's cases conditioned on each column strategy, u2 from the column
/// player's cases conditioned on each row strategy. Throws IncompleteCoverage
/// naming every missing case.
BimatrixGame build_game(const ScenarioSpec& spec);

/// Everything a run produces: the game, its equilibria, per-player rankings
/// and best-response counts, and the per-case audit columns.
struct Report {
  BimatrixGame game;
  EquilibriumSet equilibria;
  std::vector<std::vector<RankEntry>> row_rankings;  // [col strategy][row strategy]
  std::vector<std::vector<RankEntry>> col_rankings;  // [row strategy][col strategy]
  std::vector<int> row_best_response_counts;
  std::vector<int> col_best_response_counts;
  std::vector<CaseColumn> columns;  // empty for ready-made games
};

/// Runs the four phases on a fully covered scenario.
Report run_scenario(const ScenarioSpec& spec);

/// Equilibrium analysis of a ready-made real-valued game.
Report run_game(const BimatrixGame& game);

}  // namespace dnt
