#include "dnt/reference.hpp"

#include <sstream>

namespace dnt::reference {

namespace {

std::vector<std::string> split_votes(const char* s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

// (criterion, strategy) -> ten decision-maker votes, BS1 case.
struct VoteRow {
  const char* criterion;
  const char* strategy;
  const char* votes;
};

const VoteRow kBs1Votes[] = {
    {"C1", "AS1", "MG MG M MG G G G MG G G"},
    {"C1", "AS2", "G G MG M VG G MG MG VG M"},
    {"C1", "AS3", "P VP VP VP VP VP VP P VP VP"},
    {"C1", "AS4", "VP P P VP MP P P P P MP"},
    {"C1", "AS5", "P VP VP P VP VP VP P P VP"},
    {"C2", "AS1", "M MP M M MP P G MG MG MG"},
    {"C2", "AS2", "G M M G M M MG MP M MP"},
    {"C2", "AS3", "MP VP VP P VP P VP P MP P"},
    {"C2", "AS4", "MP MP VP P MP M MP P M VP"},
    {"C2", "AS5", "VP MP MP VP MP VP VP VP VP MP"},
    {"C3", "AS1", "VG VG MG VG VG G VG MG MG VG"},
    {"C3", "AS2", "VG MG G VG MG VG VG VG MG MG"},
    {"C3", "AS3", "MP M P P M P P P P P"},
    {"C3", "AS4", "MG MG M MG MG MG M M MP G"},
    {"C3", "AS5", "MP VP P P VP M VP VP P M"},
    {"C4", "AS1", "VG VG VG MG VG VG VG VG G VG"},
    {"C4", "AS2", "G MG G MG M M MG G G P"},
    {"C4", "AS3", "G MP MP P M P MP MP M MP"},
    {"C4", "AS4", "M M M MP P MP M P M P"},
    {"C4", "AS5", "MP VP MP P M P P MP P MP"},
    {"C5", "AS1", "MP VG MP M VP G M MG G MP"},
    {"C5", "AS2", "G G G MG M MG M M MG MG"},
    {"C5", "AS3", "MP MP VP P VP M VP P P MP"},
    {"C5", "AS4", "MP M P P P P P MP VP P"},
    {"C5", "AS5", "VP MP P VP MP MG VP P VP M"},
    {"C6", "AS1", "MG M G MG G MG G G MG G"},
    {"C6", "AS2", "MP MG M MP M MG MG MG MG MG"},
    {"C6", "AS3", "M M MG M MG M M MG M MG"},
    {"C6", "AS4", "MP MP M MG M MP MP M M MP"},
    {"C6", "AS5", "P P MP MG MP MP P MG M M"},
};

}  // namespace

LinguisticScale scale() {
  return LinguisticScale({
      {"VP", {0.00, 0.00, 0.25}},
      {"P", {0.10, 0.25, 0.39}},
      {"MP", {0.25, 0.39, 0.53}},
      {"M", {0.39, 0.53, 0.68}},
      {"MG", {0.53, 0.68, 0.86}},
      {"G", {0.68, 0.86, 0.97}},
      {"VG", {0.86, 1.00, 1.00}},
  });
}

CriterionWeights weights() {
  return CriterionWeights({
      {"C1", {0.53, 0.91, 1.00}},
      {"C2", {0.39, 0.66, 1.00}},
      {"C3", {0.10, 0.41, 0.68}},
      {"C4", {0.25, 0.60, 1.00}},
      {"C5", {0.39, 0.82, 1.00}},
      {"C6", {0.10, 0.49, 1.00}},
  });
}

const std::vector<double>& expected_graded_means() {
  static const std::vector<double> v = {0.862, 0.672, 0.403, 0.608, 0.778, 0.510};
  return v;
}

const std::vector<double>& expected_weight_factors() {
  static const std::vector<double> v = {0.225, 0.175, 0.105, 0.159, 0.203, 0.133};
  return v;
}

const std::vector<NonexclEntry>& expected_scale_nonexcl() {
  static const std::vector<NonexclEntry> v = {
      {"VP", "P", 0.116}, {"P", "MP", 0.140}, {"MP", "M", 0.140},
      {"M", "MG", 0.138}, {"MG", "G", 0.170}, {"G", "VG", 0.127},
  };
  return v;
}

double expected_powerset_extension() { return 0.140; }

const CombinationExample& combination_example() {
  static const CombinationExample example = [] {
    DFrame frame({"a", "b"});
    DNumber d1(frame, {{{"a"}, 0.5}, {{"b"}, 0.2}, {{"a", "b"}, 0.1}, {{"X"}, 0.2}});
    DNumber d2(frame, {{{"a"}, 0.4}, {{"b"}, 0.3}, {{"a", "b"}, 0.2}, {{"X"}, 0.1}});
    // Base degrees over {a, b, X}: u(a,b) = 0.1, u(a,X) = 0.2, u(b,X) = 0.1.
    NonExclusivityMatrix matrix(frame, {{1.0, 0.1, 0.2}, {0.1, 1.0, 0.1}, {0.2, 0.1, 1.0}});
    const auto set = [&frame](std::initializer_list<std::string_view> labels) {
      return DFocalSet::of(frame, labels).bits();
    };
    CombinationExample e{
        frame,
        std::move(d1),
        std::move(d2),
        std::move(matrix),
        // Listing order {X}, {b}, {b,X}, {a}, {a,X}, {a,b}, {a,b,X}.
        {set({"X"}), set({"b"}), set({"b", "X"}), set({"a"}), set({"a", "X"}), set({"a", "b"}),
         set({"a", "b", "X"})},
        {{1.0, 0.1, 1.0, 0.2, 1.0, 0.2, 1.0},
         {0.1, 1.0, 1.0, 0.1, 0.1, 1.0, 1.0},
         {1.0, 1.0, 1.0, 0.2, 1.0, 1.0, 1.0},
         {0.2, 0.1, 0.2, 1.0, 1.0, 1.0, 1.0},
         {1.0, 0.1, 1.0, 1.0, 1.0, 1.0, 1.0},
         {0.2, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0},
         {1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0}},
        0.423,
        {{{"a"}, 0.589},
         {{"b"}, 0.225},
         {{"a", "b"}, 0.075},
         {{"X"}, 0.035},
         {{"a", "X"}, 0.045},
         {{"b", "X"}, 0.014},
         {{"a", "b", "X"}, 0.017}},
        {{{"a"}, {"a"}, {"a"}, 0.2},
         {{"a"}, {"b"}, {"a", "b"}, 0.015},
         {{"a"}, {"a", "b"}, {"a"}, 0.1},
         {{"a"}, {"X"}, {"a", "X"}, 0.01},
         {{"b"}, {"a"}, {"a", "b"}, 0.008},
         {{"b"}, {"b"}, {"b"}, 0.06},
         {{"b"}, {"a", "b"}, {"b"}, 0.04},
         {{"b"}, {"X"}, {"b", "X"}, 0.002},
         {{"a", "b"}, {"a"}, {"a"}, 0.04},
         {{"a", "b"}, {"b"}, {"b"}, 0.03},
         {{"a", "b"}, {"a", "b"}, {"a", "b"}, 0.02},
         {{"a", "b"}, {"X"}, {"a", "b", "X"}, 0.002},
         {{"X"}, {"a"}, {"a", "X"}, 0.016},
         {{"X"}, {"b"}, {"b", "X"}, 0.006},
         {{"X"}, {"a", "b"}, {"a", "b", "X"}, 0.008},
         {{"X"}, {"X"}, {"X"}, 0.02}}};
    return e;
  }();
  return example;
}

ScenarioSpec dispute_scenario() {
  EvaluationCase bs1;
  bs1.player = "Alpha";
  bs1.given = "BS1";
  for (const auto& row : kBs1Votes)
    bs1.votes[row.strategy][row.criterion] = split_votes(row.votes);
  return {"Alpha",
          "Beta",
          {"AS1", "AS2", "AS3", "AS4", "AS5"},
          {"BS1", "BS2", "BS3", "BS4"},
          scale(),
          weights(),
          {std::move(bs1)}};
}

const std::vector<CellExpectation>& expected_case_dnumbers() {
  static const std::vector<CellExpectation> v = {
      {"C1", "AS1", {{"M", 0.1}, {"MG", 0.4}, {"G", 0.5}}},
      {"C1", "AS2", {{"M", 0.2}, {"MG", 0.3}, {"G", 0.3}, {"VG", 0.2}}},
      {"C1", "AS3", {{"VP", 0.8}, {"P", 0.2}}},
      {"C1", "AS4", {{"VP", 0.2}, {"P", 0.6}, {"MP", 0.2}}},
      {"C1", "AS5", {{"VP", 0.6}, {"P", 0.4}}},
      {"C2", "AS1", {{"P", 0.1}, {"MP", 0.2}, {"M", 0.3}, {"MG", 0.3}, {"G", 0.1}}},
      {"C2", "AS2", {{"MP", 0.2}, {"M", 0.5}, {"MG", 0.1}, {"G", 0.2}}},
      {"C2", "AS3", {{"VP", 0.4}, {"P", 0.4}, {"MP", 0.2}}},
      {"C2", "AS4", {{"VP", 0.2}, {"P", 0.2}, {"MP", 0.4}, {"M", 0.2}}},
      {"C2", "AS5", {{"VP", 0.6}, {"MP", 0.4}}},
      {"C3", "AS1", {{"MG", 0.3}, {"G", 0.1}, {"VG", 0.6}}},
      {"C3", "AS2", {{"MG", 0.4}, {"G", 0.1}, {"VG", 0.5}}},
      {"C3", "AS3", {{"P", 0.7}, {"MP", 0.1}, {"M", 0.2}}},
      {"C3", "AS4", {{"MP", 0.1}, {"M", 0.3}, {"MG", 0.5}, {"G", 0.1}}},
      {"C3", "AS5", {{"VP", 0.4}, {"P", 0.3}, {"MP", 0.1}, {"M", 0.2}}},
      {"C4", "AS1", {{"MG", 0.1}, {"G", 0.1}, {"VG", 0.8}}},
      {"C4", "AS2", {{"P", 0.1}, {"M", 0.2}, {"MG", 0.3}, {"G", 0.4}}},
      {"C4", "AS3", {{"P", 0.2}, {"MP", 0.5}, {"M", 0.2}, {"G", 0.1}}},
      {"C4", "AS4", {{"P", 0.3}, {"MP", 0.2}, {"M", 0.5}}},
      {"C4", "AS5", {{"VP", 0.1}, {"P", 0.4}, {"MP", 0.4}, {"M", 0.1}}},
      {"C5", "AS1", {{"VP", 0.1}, {"MP", 0.3}, {"M", 0.2}, {"MG", 0.1}, {"G", 0.2}, {"VG", 0.1}}},
      {"C5", "AS2", {{"M", 0.3}, {"MG", 0.4}, {"G", 0.3}}},
      {"C5", "AS3", {{"VP", 0.3}, {"P", 0.3}, {"MP", 0.3}, {"M", 0.1}}},
      {"C5", "AS4", {{"VP", 0.1}, {"P", 0.6}, {"MP", 0.2}, {"M", 0.1}}},
      {"C5", "AS5", {{"VP", 0.4}, {"P", 0.2}, {"MP", 0.2}, {"M", 0.1}, {"MG", 0.1}}},
      {"C6", "AS1", {{"M", 0.1}, {"MG", 0.4}, {"G", 0.5}}},
      {"C6", "AS2", {{"MP", 0.2}, {"M", 0.2}, {"MG", 0.6}}},
      {"C6", "AS3", {{"M", 0.6}, {"MG", 0.4}}},
      {"C6", "AS4", {{"MP", 0.5}, {"M", 0.4}, {"MG", 0.1}}},
      {"C6", "AS5", {{"P", 0.3}, {"MP", 0.3}, {"M", 0.2}, {"MG", 0.2}}},
  };
  return v;
}

const FusionExpectation& expected_fusion_chain() {
  static const FusionExpectation v = {
      {{"VG", 0.210}, {"G", 0.263}, {"MG", 0.263}, {"M", 0.129}, {"MP", 0.096}, {"P", 0.018},
       {"VP", 0.020}},
      {{{"VG"}, 0.089},
       {{"G"}, 0.378},
       {{"G", "VG"}, 0.037},
       {{"MG"}, 0.344},
       {{"MG", "G"}, 0.089},
       {{"MG", "G", "VG"}, 0.011},
       {{"M"}, 0.020},
       {{"M", "MG"}, 0.019},
       {{"M", "MG", "G"}, 0.007},
       {{"M", "MG", "G", "VG"}, 0.001},
       {{"MP"}, 0.002},
       {{"MP", "M"}, 0.001},
       {{"MP", "M", "MG"}, 0.001}},
      {{"VP", 0.000}, {"P", 0.000}, {"MP", 0.002}, {"M", 0.033}, {"MG", 0.405}, {"G", 0.448},
       {"VG", 0.112}},
      {0.629, 0.791, 0.918},
      0.779,
  };
  return v;
}

const std::vector<ColumnExpectation>& expected_bs1_column() {
  static const std::vector<ColumnExpectation> v = {
      {"AS1", {0.629, 0.791, 0.918}, 0.779},
      {"AS2", {0.533, 0.687, 0.847}, 0.689},
      {"AS3", {0.075, 0.156, 0.346}, 0.192},
      {"AS4", {0.173, 0.317, 0.460}, 0.317},
      {"AS5", {0.049, 0.100, 0.312}, 0.154},
  };
  return v;
}

BimatrixGame dispute_game() {
  return {{"AS1", "AS2", "AS3", "AS4", "AS5"},
          {"BS1", "BS2", "BS3", "BS4"},
          {{{0.779, 0.586}, {0.700, 0.508}, {0.742, 0.609}, {0.680, 0.757}},
           {{0.689, 0.561}, {0.830, 0.356}, {0.648, 0.524}, {0.377, 0.842}},
           {{0.192, 0.676}, {0.218, 0.531}, {0.790, 0.835}, {0.662, 0.828}},
           {{0.317, 0.633}, {0.347, 0.578}, {0.734, 0.786}, {0.499, 0.734}},
           {{0.154, 0.753}, {0.200, 0.606}, {0.937, 0.781}, {0.854, 0.717}}}};
}

BimatrixGame dispute_game_topsis() {
  return {{"AS1", "AS2", "AS3", "AS4", "AS5"},
          {"BS1", "BS2", "BS3", "BS4"},
          {{{0.519, 0.465}, {0.510, 0.432}, {0.500, 0.489}, {0.507, 0.546}},
           {{0.510, 0.472}, {0.554, 0.423}, {0.489, 0.451}, {0.451, 0.552}},
           {{0.352, 0.477}, {0.373, 0.431}, {0.505, 0.488}, {0.487, 0.540}},
           {{0.375, 0.465}, {0.391, 0.480}, {0.517, 0.489}, {0.469, 0.500}},
           {{0.338, 0.507}, {0.322, 0.441}, {0.554, 0.520}, {0.531, 0.513}}}};
}

const RankingExpectation& expected_rankings() {
  static const RankingExpectation v = {
      // Alpha per BS1..BS4, over AS1..AS5.
      {{1, 2, 4, 3, 5}, {2, 1, 4, 3, 5}, {3, 5, 2, 4, 1}, {2, 5, 3, 4, 1}},
      // Beta per AS1..AS5, over BS1..BS4.
      {{3, 4, 2, 1}, {2, 4, 3, 1}, {3, 4, 1, 2}, {3, 4, 1, 2}, {2, 4, 1, 3}},
  };
  return v;
}

const RankingExpectation& expected_rankings_topsis() {
  static const RankingExpectation v = {
      {{1, 2, 4, 3, 5}, {2, 1, 4, 3, 5}, {4, 5, 3, 2, 1}, {2, 5, 3, 4, 1}},
      {{3, 4, 2, 1}, {2, 4, 3, 1}, {3, 4, 2, 1}, {4, 3, 2, 1}, {3, 4, 1, 2}},
  };
  return v;
}

const FrequencyExpectation& expected_frequencies() {
  static const FrequencyExpectation v = {{1, 1, 0, 0, 2}, {0, 0, 3, 2}};
  return v;
}

const FrequencyExpectation& expected_frequencies_topsis() {
  static const FrequencyExpectation v = {{1, 1, 0, 0, 2}, {0, 0, 1, 4}};
  return v;
}

EquilibriumCell expected_equilibrium() { return {4, 2}; }

}  // namespace dnt::reference
