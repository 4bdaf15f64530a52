#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dnt/dnumbers.hpp"
#include "dnt/fuzzy.hpp"
#include "dnt/game.hpp"
#include "dnt/pipeline.hpp"

/// Bundled reference dataset: a two-country territorial-dispute case study
/// (players Alpha and Beta, a ten-member decision group, six criteria, a
/// seven-grade linguistic scale) together with the published values the
/// implementation is validated against by `dnt reproduce-paper` and the
/// acceptance suite.
namespace dnt::reference {

/// Seven-grade scale VP..VG.
LinguisticScale scale();

/// Fuzzy weights for the six criteria C1..C6.
CriterionWeights weights();

/// Expected graded means of the criterion weights, in criterion order.
const std::vector<double>& expected_graded_means();

/// Expected normalized weight factors, in criterion order.
const std::vector<double>& expected_weight_factors();

/// Non-zero off-diagonal entries of the scale's non-exclusivity matrix,
/// keyed by adjacent grade pairs.
struct NonexclEntry {
  const char* a;
  const char* b;
  double degree;
};
const std::vector<NonexclEntry>& expected_scale_nonexcl();

/// Power-set extension probe: u({VP, P}, {MP, X}).
double expected_powerset_extension();

/// The worked two-source combination example on theta = {a, b}: inputs,
/// base degrees, the full extended matrix, the routed product table, the
/// exclusive conflict and the combination result.
struct CombinationExample {
  DFrame frame;
  DNumber d1;
  DNumber d2;
  NonExclusivityMatrix matrix;
  /// Focal sets of the extended-matrix listing, as bitsets in listing order.
  std::vector<std::uint32_t> extended_order;
  std::vector<std::vector<double>> extended_matrix;
  double conflict;  // K_D
  /// (focal labels, mass) of the expected combination result.
  std::vector<std::pair<std::vector<std::string>, double>> result;
  /// Expected routed products: left focal, right focal, target, value.
  struct TableCell {
    std::vector<std::string> left;
    std::vector<std::string> right;
    std::vector<std::string> target;
    double value;
  };
  std::vector<TableCell> table;
};
const CombinationExample& combination_example();

/// The one fully published evaluation case: Alpha's strategies rated by ten
/// decision makers on six criteria, given Beta plays BS1.
ScenarioSpec dispute_scenario();

/// Expected per-cell D numbers of the BS1 case, keyed (criterion, strategy).
struct CellExpectation {
  const char* criterion;
  const char* strategy;
  std::vector<std::pair<const char*, double>> masses;  // singleton label -> mass
};
const std::vector<CellExpectation>& expected_case_dnumbers();

/// Expected fusion chain for strategy AS1 given BS1.
struct FusionExpectation {
  std::vector<std::pair<const char*, double>> averaged;          // singletons
  std::vector<std::pair<std::vector<std::string>, double>> fused;  // printed terms only
  std::vector<std::pair<const char*, double>> distribution;      // pignistic, theta order
  TriangularFuzzyNumber fuzzy_payoff;
  double payoff;
};
const FusionExpectation& expected_fusion_chain();

/// Expected fuzzy payoffs and defuzzified payoffs for the whole BS1 column.
struct ColumnExpectation {
  const char* strategy;
  TriangularFuzzyNumber fuzzy_payoff;
  double payoff;
};
const std::vector<ColumnExpectation>& expected_bs1_column();

/// Real-valued payoff matrix produced by this framework for the full dispute.
BimatrixGame dispute_game();

/// Payoff matrix for the same dispute produced by a TOPSIS-based method,
/// used as a comparison baseline.
BimatrixGame dispute_game_topsis();

/// Expected rankings, indexed [opponent strategy][own strategy], rank 1 = best.
struct RankingExpectation {
  std::vector<std::vector<int>> alpha;  // Alpha's rankings per Beta strategy
  std::vector<std::vector<int>> beta;   // Beta's rankings per Alpha strategy
};
const RankingExpectation& expected_rankings();         // for dispute_game()
const RankingExpectation& expected_rankings_topsis();  // for dispute_game_topsis()

/// Expected best-response counts in strategy order.
struct FrequencyExpectation {
  std::vector<int> alpha;
  std::vector<int> beta;
};
const FrequencyExpectation& expected_frequencies();
const FrequencyExpectation& expected_frequencies_topsis();

/// The unique equilibrium of both payoff matrices: (AS5, BS3).
EquilibriumCell expected_equilibrium();

}  // namespace dnt::reference
