#include "dnt/pipeline.hpp"

#include <algorithm>

namespace dnt {

namespace {

/// Checks an evaluation case against the scenario it belongs to: known
/// player, a real opponent strategy, one vote list per (strategy, criterion)
/// cell, equal decision-maker counts, and labels confined to the scale.
void validate_case(const EvaluationCase& c, const ScenarioSpec& spec) {
  const std::vector<std::string>* own = nullptr;
  const std::vector<std::string>* opponent = nullptr;
  if (c.player == spec.row_player) {
    own = &spec.row_strategies;
    opponent = &spec.col_strategies;
  } else if (c.player == spec.col_player) {
    own = &spec.col_strategies;
    opponent = &spec.row_strategies;
  } else {
    throw DomainError("case " + c.id() + ": unknown player " + c.player);
  }
  if (std::find(opponent->begin(), opponent->end(), c.given) == opponent->end())
    throw DomainError("case " + c.id() + ": " + c.given + " is not an opponent strategy");

  std::size_t dm_count = 0;
  for (const auto& strategy : *own) {
    const auto sit = c.votes.find(strategy);
    if (sit == c.votes.end())
      throw DomainError("case " + c.id() + ": no votes for strategy " + strategy);
    for (const auto& criterion : spec.weights.labels()) {
      const auto cit = sit->second.find(criterion);
      if (cit == sit->second.end())
        throw DomainError("case " + c.id() + ": no votes for (" + strategy + ", " + criterion +
                          ")");
      if (cit->second.empty())
        throw EmptyVotes("case " + c.id() + ": empty vote list for (" + strategy + ", " +
                         criterion + ")");
      if (dm_count == 0) dm_count = cit->second.size();
      if (cit->second.size() != dm_count)
        throw DomainError("case " + c.id() + ": decision-maker count differs at (" + strategy +
                          ", " + criterion + ")");
      for (const auto& label : cit->second)
        if (!spec.scale.contains(label))
          throw UnknownLabel("case " + c.id() + ": vote label " + label +
                             " is not on the scale");
    }
  }
  if (c.dm_weights && c.dm_weights->size() != dm_count)
    throw LengthMismatch("case " + c.id() + ": decision-maker weights differ in length");
}

DNumber votes_to_dnumber(const std::vector<std::string>& votes,
                         const std::optional<std::vector<double>>& dm_weights,
                         const DFrame& frame) {
  if (dm_weights) return from_linguistic_votes(votes, *dm_weights, frame);
  return from_linguistic_votes(votes, frame);
}

}  // namespace

CriterionWeights::CriterionWeights(
    std::vector<std::pair<std::string, TriangularFuzzyNumber>> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) throw EmptyInput("criterion weights must not be empty");
  for (const auto& [label, tfn] : entries_) {
    if (label.empty()) throw DomainError("criterion labels must not be empty");
    if (std::find(labels_.begin(), labels_.end(), label) != labels_.end())
      throw DomainError("duplicate criterion label: " + label);
    labels_.push_back(label);
  }
}

const EvaluationCase* ScenarioSpec::find_case(const std::string& player,
                                              const std::string& given) const {
  for (const auto& c : cases)
    if (c.player == player && c.given == given) return &c;
  return nullptr;
}

std::vector<std::pair<std::string, double>> normalize_weights(const CriterionWeights& w) {
  std::vector<std::pair<std::string, double>> out;
  out.reserve(w.size());
  double total = 0.0;
  for (const auto& [label, tfn] : w.entries()) {
    const double gm = graded_mean(tfn);
    if (gm <= 0.0) throw DegenerateWeight("criterion " + label + " has non-positive graded mean");
    out.emplace_back(label, gm);
    total += gm;
  }
  for (auto& [label, value] : out) value /= total;
  return out;
}

std::map<std::pair<std::string, std::string>, DNumber> case_to_dnumber_matrix(
    const EvaluationCase& c, const LinguisticScale& scale) {
  const DFrame frame(scale.labels());
  std::map<std::pair<std::string, std::string>, DNumber> out;
  for (const auto& [strategy, by_criterion] : c.votes)
    for (const auto& [criterion, votes] : by_criterion)
      out.emplace(std::make_pair(strategy, criterion),
                  votes_to_dnumber(votes, c.dm_weights, frame));
  return out;
}

DNumber fuse_strategy(const std::vector<DNumber>& cells, const std::vector<double>& weights,
                      const NonExclusivityMatrix& m) {
  return wac_combine(cells, weights, m);
}

double dnumber_to_payoff(const DNumber& d, const LinguisticScale& scale) {
  const auto distribution = d_ppt(d);
  std::vector<TriangularFuzzyNumber> tfns;
  std::vector<double> ws;
  tfns.reserve(distribution.size());
  ws.reserve(distribution.size());
  for (const auto& [label, p] : distribution) {
    tfns.push_back(scale.at(label));
    ws.push_back(p);
  }
  return centroid_defuzzify(weighted_sum(tfns, ws));
}

CaseColumn build_payoff_column(const EvaluationCase& c, const ScenarioSpec& spec) {
  validate_case(c, spec);
  const std::vector<std::string>& own =
      c.player == spec.row_player ? spec.row_strategies : spec.col_strategies;
  const DFrame frame(spec.scale.labels());
  const NonExclusivityMatrix matrix = build_nonexcl_from_scale(spec.scale);
  const auto weights = normalize_weights(spec.weights);

  CaseColumn column{c.player, c.given, {}};
  column.entries.reserve(own.size());
  for (const auto& strategy : own) {
    StrategyEvaluation entry{strategy, {}, DNumber(frame, {{{"X"}, 1.0}}), {},
                             TriangularFuzzyNumber::crisp(0.0), 0.0};
    std::vector<DNumber> cells;
    std::vector<double> ws;
    cells.reserve(weights.size());
    for (const auto& [criterion, weight] : weights) {
      DNumber d = votes_to_dnumber(c.votes.at(strategy).at(criterion), c.dm_weights, frame);
      entry.per_criterion.emplace_back(criterion, d);
      cells.push_back(std::move(d));
      ws.push_back(weight);
    }
    entry.fused = fuse_strategy(cells, ws, matrix);
    entry.distribution = d_ppt(entry.fused);
    std::vector<TriangularFuzzyNumber> tfns;
    std::vector<double> dis;
    for (const auto& [label, p] : entry.distribution) {
      tfns.push_back(spec.scale.at(label));
      dis.push_back(p);
    }
    entry.fuzzy_payoff = weighted_sum(tfns, dis);
    entry.payoff = centroid_defuzzify(entry.fuzzy_payoff);
    column.entries.push_back(std::move(entry));
  }
  return column;
}

namespace {

/// Evaluates every case a full game needs, row-player columns first.
/// Throws IncompleteCoverage naming each missing case.
std::vector<CaseColumn> build_all_columns(const ScenarioSpec& spec) {
  std::vector<std::string> missing;
  for (const auto& bs : spec.col_strategies)
    if (!spec.find_case(spec.row_player, bs)) missing.push_back(spec.row_player + "|" + bs);
  for (const auto& as : spec.row_strategies)
    if (!spec.find_case(spec.col_player, as)) missing.push_back(spec.col_player + "|" + as);
  if (!missing.empty()) throw IncompleteCoverage(std::move(missing));

  std::vector<CaseColumn> columns;
  columns.reserve(spec.col_strategies.size() + spec.row_strategies.size());
  for (const auto& bs : spec.col_strategies)
    columns.push_back(build_payoff_column(*spec.find_case(spec.row_player, bs), spec));
  for (const auto& as : spec.row_strategies)
    columns.push_back(build_payoff_column(*spec.find_case(spec.col_player, as), spec));
  return columns;
}

BimatrixGame assemble_game(const ScenarioSpec& spec, const std::vector<CaseColumn>& columns) {
  const std::size_t p = spec.row_strategies.size();
  const std::size_t q = spec.col_strategies.size();
  std::vector<std::vector<PayoffPair>> payoffs(p, std::vector<PayoffPair>(q, {0.0, 0.0}));
  for (std::size_t j = 0; j < q; ++j)
    for (std::size_t i = 0; i < p; ++i) payoffs[i][j].u1 = columns[j].entries[i].payoff;
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < q; ++j) payoffs[i][j].u2 = columns[q + i].entries[j].payoff;
  return {spec.row_strategies, spec.col_strategies, std::move(payoffs)};
}

Report analyze(BimatrixGame game, std::vector<CaseColumn> columns) {
  Report report{std::move(game), {}, {}, {}, {}, {}, std::move(columns)};
  report.equilibria = pure_nash_equilibria(report.game);
  report.row_rankings = strategy_rankings(report.game, Player::row);
  report.col_rankings = strategy_rankings(report.game, Player::col);
  report.row_best_response_counts = best_response_frequency(report.game, Player::row);
  report.col_best_response_counts = best_response_frequency(report.game, Player::col);
  return report;
}

}  // namespace

BimatrixGame build_game(const ScenarioSpec& spec) {
  return assemble_game(spec, build_all_columns(spec));
}

Report run_scenario(const ScenarioSpec& spec) {
  std::vector<CaseColumn> columns = build_all_columns(spec);
  BimatrixGame game = assemble_game(spec, columns);
  return analyze(std::move(game), std::move(columns));
}

Report run_game(const BimatrixGame& game) { return analyze(game, {}); }

}  // namespace dnt
