#include "dnt/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace dnt::io {

namespace {

using nlohmann::ordered_json;

ordered_json parse_json(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("", std::string("invalid JSON: ") + e.what());
  }
}

const ordered_json& require(const ordered_json& j, const std::string& key,
                            const std::string& path) {
  if (!j.is_object()) throw ParseError(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(path.empty() ? key : path + "." + key, "missing field");
  return *it;
}

std::string join_path(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

double as_number(const ordered_json& j, const std::string& path) {
  if (!j.is_number()) throw ParseError(path, "expected a number");
  return j.get<double>();
}

std::string as_string(const ordered_json& j, const std::string& path) {
  if (!j.is_string()) throw ParseError(path, "expected a string");
  return j.get<std::string>();
}

std::vector<std::string> as_string_list(const ordered_json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path, "expected an array of strings");
  std::vector<std::string> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(as_string(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

TriangularFuzzyNumber as_tfn(const ordered_json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 3)
    throw ParseError(path, "expected a 3-element array [a1, a2, a3]");
  const double a1 = as_number(j[0], path + "[0]");
  const double a2 = as_number(j[1], path + "[1]");
  const double a3 = as_number(j[2], path + "[2]");
  try {
    return {a1, a2, a3};
  } catch (const DomainError& e) {
    throw ParseError(path, e.what());
  }
}

ordered_json tfn_json(const TriangularFuzzyNumber& f) {
  return ordered_json::array({f.a1, f.a2, f.a3});
}

LinguisticScale scale_from_json(const ordered_json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) throw ParseError(path, "expected a non-empty array");
  std::vector<std::pair<std::string, TriangularFuzzyNumber>> entries;
  entries.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string entry_path = path + "[" + std::to_string(i) + "]";
    entries.emplace_back(as_string(require(j[i], "label", entry_path), entry_path + ".label"),
                         as_tfn(require(j[i], "tfn", entry_path), entry_path + ".tfn"));
  }
  try {
    return LinguisticScale(std::move(entries));
  } catch (const DomainError& e) {
    throw ParseError(path, e.what());
  }
}

ordered_json scale_json(const LinguisticScale& scale) {
  ordered_json arr = ordered_json::array();
  for (const auto& [label, tfn] : scale.entries())
    arr.push_back({{"label", label}, {"tfn", tfn_json(tfn)}});
  return arr;
}

DNumber dnumber_from_json(const ordered_json& j, const DFrame& frame, const std::string& path) {
  if (!j.is_array() || j.empty()) throw ParseError(path, "expected a non-empty array of focals");
  std::vector<std::pair<std::vector<std::string>, double>> partial;
  bool has_x = false;
  double total = 0.0;
  partial.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string row_path = path + "[" + std::to_string(i) + "]";
    auto labels = as_string_list(require(j[i], "focal", row_path), row_path + ".focal");
    const double mass = as_number(require(j[i], "mass", row_path), row_path + ".mass");
    if (mass <= 0.0) throw ParseError(row_path + ".mass", "focal masses must be positive");
    for (const auto& l : labels)
      if (l == DFrame::kXLabel) has_x = true;
    total += mass;
    partial.emplace_back(std::move(labels), mass);
  }
  try {
    if (!has_x && total <= 1.0 + 1e-9) return augment_with_x(frame, partial);
    return DNumber(frame, partial);
  } catch (const DomainError& e) {
    throw ParseError(path, e.what());
  }
}

NonExclusivityMatrix nonexcl_from_json(const ordered_json& j, const std::string& path) {
  auto labels = as_string_list(require(j, "labels", path), join_path(path, "labels"));
  if (labels.empty() || labels.back() != DFrame::kXLabel)
    throw ParseError(join_path(path, "labels"), "last label must be X");
  labels.pop_back();
  const ordered_json& rows = require(j, "matrix", path);
  const std::string rows_path = join_path(path, "matrix");
  if (!rows.is_array()) throw ParseError(rows_path, "expected an array of rows");
  std::vector<std::vector<double>> base;
  base.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string row_path = rows_path + "[" + std::to_string(i) + "]";
    if (!rows[i].is_array()) throw ParseError(row_path, "expected an array of numbers");
    std::vector<double> row;
    row.reserve(rows[i].size());
    for (std::size_t k = 0; k < rows[i].size(); ++k)
      row.push_back(as_number(rows[i][k], row_path + "[" + std::to_string(k) + "]"));
    base.push_back(std::move(row));
  }
  try {
    return {DFrame(std::move(labels)), std::move(base)};
  } catch (const DomainError& e) {
    throw ParseError(rows_path, e.what());
  }
}

BimatrixGame game_from_json(const ordered_json& j, const std::string& path) {
  auto rows = as_string_list(require(j, "row_strategies", path), join_path(path, "row_strategies"));
  auto cols = as_string_list(require(j, "col_strategies", path), join_path(path, "col_strategies"));
  const ordered_json& cells = require(j, "payoffs", path);
  const std::string cells_path = join_path(path, "payoffs");
  if (!cells.is_array()) throw ParseError(cells_path, "expected an array of rows");
  std::vector<std::vector<PayoffPair>> payoffs;
  payoffs.reserve(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const std::string row_path = cells_path + "[" + std::to_string(i) + "]";
    if (!cells[i].is_array()) throw ParseError(row_path, "expected an array of [u1, u2] pairs");
    std::vector<PayoffPair> row;
    row.reserve(cells[i].size());
    for (std::size_t k = 0; k < cells[i].size(); ++k) {
      const std::string cell_path = row_path + "[" + std::to_string(k) + "]";
      const ordered_json& pair = cells[i][k];
      if (!pair.is_array() || pair.size() != 2)
        throw ParseError(cell_path, "expected a 2-element array [u1, u2]");
      row.push_back({as_number(pair[0], cell_path + "[0]"), as_number(pair[1], cell_path + "[1]")});
    }
    payoffs.push_back(std::move(row));
  }
  try {
    return {std::move(rows), std::move(cols), std::move(payoffs)};
  } catch (const DomainError& e) {
    throw ParseError(cells_path, e.what());
  }
}

ordered_json dnumber_json(const DNumber& d) {
  ordered_json arr = ordered_json::array();
  for (const auto& [bits, mass] : d.masses()) {
    ordered_json labels = ordered_json::array();
    for (std::size_t i = 0; i < d.frame().size(); ++i)
      if (bits & (1u << i)) labels.push_back(d.frame().label(i));
    if (bits & d.frame().x_bit()) labels.push_back(std::string(DFrame::kXLabel));
    arr.push_back({{"focal", labels}, {"mass", mass}});
  }
  return arr;
}

ordered_json pairs_json(const std::vector<std::pair<std::string, double>>& pairs) {
  ordered_json obj = ordered_json::object();
  for (const auto& [label, value] : pairs) obj[label] = value;
  return obj;
}

ordered_json game_json(const BimatrixGame& game) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < game.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < game.cols(); ++j)
      row.push_back(ordered_json::array({game.at(i, j).u1, game.at(i, j).u2}));
    rows.push_back(std::move(row));
  }
  return {{"row_strategies", game.row_strategies()},
          {"col_strategies", game.col_strategies()},
          {"payoffs", std::move(rows)}};
}

ordered_json rankings_json(const std::vector<std::vector<RankEntry>>& ranks,
                           const std::vector<std::string>& opponent,
                           const std::vector<std::string>& own) {
  ordered_json obj = ordered_json::object();
  for (std::size_t opp = 0; opp < ranks.size(); ++opp) {
    ordered_json per = ordered_json::object();
    for (std::size_t i = 0; i < ranks[opp].size(); ++i) {
      per[own[i]] = ranks[opp][i].tied
                        ? ordered_json{{"rank", ranks[opp][i].rank}, {"tied", true}}
                        : ordered_json(ranks[opp][i].rank);
    }
    obj[opponent[opp]] = std::move(per);
  }
  return obj;
}

}  // namespace

DocumentKind detect_kind(const std::string& text) {
  const ordered_json j = parse_json(text);
  if (!j.is_object()) return DocumentKind::unknown;
  if (j.contains("cases")) return DocumentKind::scenario;
  if (j.contains("payoffs")) return DocumentKind::game;
  if (j.contains("dnumbers")) return DocumentKind::dnumbers;
  if (j.contains("matrix")) return DocumentKind::nonexcl_matrix;
  if (j.contains("scale")) return DocumentKind::scale;
  return DocumentKind::unknown;
}

LinguisticScale parse_scale(const std::string& text) {
  const ordered_json j = parse_json(text);
  return scale_from_json(require(j, "scale", ""), "scale");
}

std::pair<DFrame, std::vector<DNumber>> parse_dnumbers(const std::string& text) {
  const ordered_json j = parse_json(text);
  DFrame frame = [&] {
    try {
      return DFrame(as_string_list(require(j, "theta", ""), "theta"));
    } catch (const DomainError& e) {
      throw ParseError("theta", e.what());
    }
  }();
  const ordered_json& list = require(j, "dnumbers", "");
  if (!list.is_array() || list.empty())
    throw ParseError("dnumbers", "expected a non-empty array");
  std::vector<DNumber> ds;
  ds.reserve(list.size());
  for (std::size_t i = 0; i < list.size(); ++i)
    ds.push_back(dnumber_from_json(list[i], frame, "dnumbers[" + std::to_string(i) + "]"));
  return {std::move(frame), std::move(ds)};
}

NonExclusivityMatrix parse_nonexcl_matrix(const std::string& text) {
  return nonexcl_from_json(parse_json(text), "");
}

BasicProbabilityAssignment parse_bpa(const std::string& text) {
  const ordered_json j = parse_json(text);
  Frame frame = [&] {
    try {
      return Frame(as_string_list(require(j, "frame", ""), "frame"));
    } catch (const DomainError& e) {
      throw ParseError("frame", e.what());
    }
  }();
  const ordered_json& list = require(j, "masses", "");
  if (!list.is_array() || list.empty()) throw ParseError("masses", "expected a non-empty array");
  std::vector<std::pair<std::vector<std::string>, double>> focals;
  focals.reserve(list.size());
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string row_path = "masses[" + std::to_string(i) + "]";
    focals.emplace_back(
        as_string_list(require(list[i], "subset", row_path), row_path + ".subset"),
        as_number(require(list[i], "mass", row_path), row_path + ".mass"));
  }
  try {
    return {std::move(frame), focals};
  } catch (const DomainError& e) {
    throw ParseError("masses", e.what());
  }
}

ScenarioSpec parse_scenario(const std::string& text) {
  const ordered_json j = parse_json(text);
  const auto players = as_string_list(require(j, "players", ""), "players");
  if (players.size() != 2) throw ParseError("players", "expected exactly two players");
  if (players[0] == players[1]) throw ParseError("players", "players must be distinct");

  const ordered_json& strategies = require(j, "strategies", "");
  auto row_strategies =
      as_string_list(require(strategies, players[0], "strategies"), "strategies." + players[0]);
  auto col_strategies =
      as_string_list(require(strategies, players[1], "strategies"), "strategies." + players[1]);
  if (row_strategies.empty() || col_strategies.empty())
    throw ParseError("strategies", "each player needs at least one strategy");

  LinguisticScale scale = scale_from_json(require(j, "scale", ""), "scale");

  const ordered_json& criteria = require(j, "criteria", "");
  if (!criteria.is_array() || criteria.empty())
    throw ParseError("criteria", "expected a non-empty array");
  std::vector<std::pair<std::string, TriangularFuzzyNumber>> weight_entries;
  weight_entries.reserve(criteria.size());
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const std::string path = "criteria[" + std::to_string(i) + "]";
    weight_entries.emplace_back(
        as_string(require(criteria[i], "label", path), path + ".label"),
        as_tfn(require(criteria[i], "weight", path), path + ".weight"));
  }

  const ordered_json& cases = require(j, "cases", "");
  if (!cases.is_array()) throw ParseError("cases", "expected an array");
  std::vector<EvaluationCase> parsed_cases;
  parsed_cases.reserve(cases.size());
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const std::string path = "cases[" + std::to_string(i) + "]";
    EvaluationCase c;
    c.player = as_string(require(cases[i], "player", path), path + ".player");
    c.given = as_string(require(cases[i], "given", path), path + ".given");
    const ordered_json& votes = require(cases[i], "votes", path);
    if (!votes.is_object()) throw ParseError(path + ".votes", "expected an object");
    for (const auto& [strategy, by_criterion] : votes.items()) {
      if (!by_criterion.is_object())
        throw ParseError(path + ".votes." + strategy, "expected an object");
      for (const auto& [criterion, list] : by_criterion.items())
        c.votes[strategy][criterion] =
            as_string_list(list, path + ".votes." + strategy + "." + criterion);
    }
    if (cases[i].contains("dm_weights")) {
      const ordered_json& ws = cases[i]["dm_weights"];
      if (!ws.is_array()) throw ParseError(path + ".dm_weights", "expected an array of numbers");
      std::vector<double> parsed;
      parsed.reserve(ws.size());
      for (std::size_t k = 0; k < ws.size(); ++k)
        parsed.push_back(as_number(ws[k], path + ".dm_weights[" + std::to_string(k) + "]"));
      c.dm_weights = std::move(parsed);
    }
    parsed_cases.push_back(std::move(c));
  }

  try {
    return {players[0],
            players[1],
            std::move(row_strategies),
            std::move(col_strategies),
            std::move(scale),
            CriterionWeights(std::move(weight_entries)),
            std::move(parsed_cases)};
  } catch (const DomainError& e) {
    throw ParseError("criteria", e.what());
  }
}

BimatrixGame parse_game(const std::string& text) { return game_from_json(parse_json(text), ""); }

std::string serialize_scale(const LinguisticScale& scale, int indent) {
  return ordered_json{{"scale", scale_json(scale)}}.dump(indent);
}

std::string serialize_dnumbers(const DFrame& frame, const std::vector<DNumber>& ds, int indent) {
  ordered_json list = ordered_json::array();
  for (const auto& d : ds) list.push_back(dnumber_json(d));
  return ordered_json{{"theta", frame.theta()}, {"dnumbers", std::move(list)}}.dump(indent);
}

std::string serialize_nonexcl_matrix(const NonExclusivityMatrix& m, int indent) {
  std::vector<std::string> labels = m.frame().theta();
  labels.push_back(std::string(DFrame::kXLabel));
  return ordered_json{{"labels", labels}, {"matrix", m.rows()}}.dump(indent);
}

std::string serialize_bpa(const BasicProbabilityAssignment& m, int indent) {
  ordered_json list = ordered_json::array();
  for (const auto& [bits, mass] : m.masses()) {
    ordered_json labels = ordered_json::array();
    for (std::size_t i = 0; i < m.frame().size(); ++i)
      if (bits & (1u << i)) labels.push_back(m.frame().label(i));
    list.push_back({{"subset", labels}, {"mass", mass}});
  }
  return ordered_json{{"frame", m.frame().labels()}, {"masses", std::move(list)}}.dump(indent);
}

std::string serialize_scenario(const ScenarioSpec& spec, int indent) {
  ordered_json criteria = ordered_json::array();
  for (const auto& [label, tfn] : spec.weights.entries())
    criteria.push_back({{"label", label}, {"weight", tfn_json(tfn)}});
  ordered_json cases = ordered_json::array();
  for (const auto& c : spec.cases) {
    ordered_json votes = ordered_json::object();
    for (const auto& [strategy, by_criterion] : c.votes) {
      ordered_json per = ordered_json::object();
      for (const auto& [criterion, list] : by_criterion) per[criterion] = list;
      votes[strategy] = std::move(per);
    }
    ordered_json entry{{"player", c.player}, {"given", c.given}, {"votes", std::move(votes)}};
    if (c.dm_weights) entry["dm_weights"] = *c.dm_weights;
    cases.push_back(std::move(entry));
  }
  return ordered_json{
      {"players", ordered_json::array({spec.row_player, spec.col_player})},
      {"strategies",
       {{spec.row_player, spec.row_strategies}, {spec.col_player, spec.col_strategies}}},
      {"scale", scale_json(spec.scale)},
      {"criteria", std::move(criteria)},
      {"cases", std::move(cases)}}
      .dump(indent);
}

std::string serialize_game(const BimatrixGame& game, int indent) {
  return game_json(game).dump(indent);
}

std::string serialize_report(const Report& report, int indent) {
  ordered_json equilibria = ordered_json::array();
  for (const auto& cell : report.equilibria)
    equilibria.push_back(ordered_json::array({report.game.row_strategies()[cell.row],
                                              report.game.col_strategies()[cell.col]}));
  ordered_json frequencies = ordered_json::object();
  {
    ordered_json row = ordered_json::object();
    for (std::size_t i = 0; i < report.row_best_response_counts.size(); ++i)
      row[report.game.row_strategies()[i]] = report.row_best_response_counts[i];
    ordered_json col = ordered_json::object();
    for (std::size_t j = 0; j < report.col_best_response_counts.size(); ++j)
      col[report.game.col_strategies()[j]] = report.col_best_response_counts[j];
    frequencies["row"] = std::move(row);
    frequencies["col"] = std::move(col);
  }
  ordered_json columns = ordered_json::array();
  for (const auto& column : report.columns) {
    ordered_json entries = ordered_json::array();
    for (const auto& e : column.entries) {
      ordered_json per_criterion = ordered_json::object();
      for (const auto& [criterion, d] : e.per_criterion) per_criterion[criterion] = dnumber_json(d);
      entries.push_back({{"strategy", e.strategy},
                         {"per_criterion", std::move(per_criterion)},
                         {"fused", dnumber_json(e.fused)},
                         {"distribution", pairs_json(e.distribution)},
                         {"fuzzy_payoff", tfn_json(e.fuzzy_payoff)},
                         {"payoff", e.payoff}});
    }
    columns.push_back(
        {{"player", column.player}, {"given", column.given}, {"entries", std::move(entries)}});
  }
  return ordered_json{
      {"game", game_json(report.game)},
      {"equilibria", std::move(equilibria)},
      {"rankings",
       {{"row", rankings_json(report.row_rankings, report.game.col_strategies(),
                              report.game.row_strategies())},
        {"col", rankings_json(report.col_rankings, report.game.row_strategies(),
                              report.game.col_strategies())}}},
      {"best_response_counts", std::move(frequencies)},
      {"columns", std::move(columns)}}
      .dump(indent);
}

std::vector<std::pair<std::string, double>> dnumber_rows(const DNumber& d) {
  std::vector<std::pair<std::string, double>> rows;
  rows.reserve(d.focal_count());
  for (const auto& [bits, mass] : d.masses())
    rows.emplace_back(DFocalSet(d.frame(), bits).to_string(), mass);
  return rows;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(path, "cannot open file for writing");
  out << content;
}

}  // namespace dnt::io
