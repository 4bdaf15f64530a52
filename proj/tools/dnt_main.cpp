// dnt: command line front end for D-number evidence fusion and the
// game-theoretic evaluation pipeline.
//
// Exit codes: 0 success, 1 reproduction failure, 2 parse error,
//             3 domain error, 4 incomplete coverage.

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dnt/io.hpp"
#include "dnt/pipeline.hpp"
#include "dnt/reference.hpp"
#include "dnt/reproduce.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitReproduceFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitCoverage = 4;

struct GlobalOptions {
  std::string format = "table";
  std::optional<double> tolerance;
};

std::string fmt3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

void error_line(const std::string& kind, const nlohmann::ordered_json& detail) {
  nlohmann::ordered_json line = {{"error", kind}};
  for (const auto& [key, value] : detail.items()) line[key] = value;
  std::cerr << line.dump() << "\n";
}

void print_padded(const std::string& s, std::size_t width) {
  std::fputs(s.c_str(), stdout);
  for (std::size_t i = s.size(); i < width; ++i) std::fputc(' ', stdout);
}

// ---------------------------------------------------------------------------
// nonexcl

int cmd_nonexcl(const GlobalOptions& global, const std::string& scale_file) {
  const dnt::LinguisticScale scale = dnt::io::parse_scale(dnt::io::read_file(scale_file));
  const dnt::NonExclusivityMatrix m = dnt::build_nonexcl_from_scale(scale);
  if (global.format == "json") {
    std::cout << dnt::io::serialize_nonexcl_matrix(m) << "\n";
    return kExitOk;
  }
  std::vector<std::string> labels = m.frame().theta();
  labels.emplace_back(dnt::DFrame::kXLabel);
  std::size_t width = 5;
  for (const auto& l : labels) width = std::max(width, l.size() + 2);
  print_padded("", width);
  for (const auto& l : labels) print_padded(l, width);
  std::fputc('\n', stdout);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    print_padded(labels[i], width);
    for (std::size_t j = 0; j < labels.size(); ++j) print_padded(fmt3(m.base(i, j)), width);
    std::fputc('\n', stdout);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// combine

int cmd_combine(const GlobalOptions& global, const std::string& dnumbers_file,
                const std::string& matrix_file) {
  const auto [frame, ds] = dnt::io::parse_dnumbers(dnt::io::read_file(dnumbers_file));
  const dnt::NonExclusivityMatrix m =
      dnt::io::parse_nonexcl_matrix(dnt::io::read_file(matrix_file));
  if (!(m.frame() == frame))
    throw dnt::FrameMismatch("the matrix and the D numbers use different frames");
  if (ds.size() < 2) throw dnt::EmptyInput("combine needs at least two D numbers");

  dnt::DNumber result = ds[0];
  std::vector<double> conflicts;
  for (std::size_t i = 1; i < ds.size(); ++i) {
    try {
      conflicts.push_back(dnt::exclusive_conflict(result, ds[i], m));
      result = dnt::ecr_combine(result, ds[i], m);
    } catch (const dnt::TotalExclusiveConflict& e) {
      throw dnt::TotalExclusiveConflict("step " + std::to_string(i) + ": " + e.what());
    }
  }

  if (global.format == "json") {
    nlohmann::ordered_json out{{"steps", nlohmann::ordered_json::array()},
                               {"result", nlohmann::ordered_json::array()}};
    for (std::size_t i = 0; i < conflicts.size(); ++i)
      out["steps"].push_back({{"step", i + 1}, {"conflict", conflicts[i]}});
    for (const auto& [focal, mass] : dnt::io::dnumber_rows(result))
      out["result"].push_back({{"focal", focal}, {"mass", mass}});
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  for (std::size_t i = 0; i < conflicts.size(); ++i)
    std::printf("step %zu: K_D = %s\n", i + 1, fmt3(conflicts[i]).c_str());
  for (const auto& [focal, mass] : dnt::io::dnumber_rows(result))
    std::printf("D(%s) = %s\n", focal.c_str(), fmt3(mass).c_str());
  return kExitOk;
}

// ---------------------------------------------------------------------------
// run

void print_column(const dnt::CaseColumn& column) {
  std::printf("case %s | %s\n", column.player.c_str(), column.given.c_str());
  for (const auto& entry : column.entries) {
    std::printf("\nstrategy %s\n", entry.strategy.c_str());
    for (const auto& [criterion, d] : entry.per_criterion) {
      std::printf("  %s:", criterion.c_str());
      for (const auto& [focal, mass] : dnt::io::dnumber_rows(d))
        std::printf(" %s %s;", focal.c_str(), fmt3(mass).c_str());
      std::fputc('\n', stdout);
    }
    std::printf("  fused:");
    for (const auto& [focal, mass] : dnt::io::dnumber_rows(entry.fused))
      std::printf(" %s %s;", focal.c_str(), fmt3(mass).c_str());
    std::fputc('\n', stdout);
    std::printf("  distribution:");
    for (const auto& [label, p] : entry.distribution)
      std::printf(" %s %s;", label.c_str(), fmt3(p).c_str());
    std::fputc('\n', stdout);
    std::printf("  fuzzy payoff: (%s, %s, %s)\n", fmt3(entry.fuzzy_payoff.a1).c_str(),
                fmt3(entry.fuzzy_payoff.a2).c_str(), fmt3(entry.fuzzy_payoff.a3).c_str());
    std::printf("  payoff: %s\n", fmt3(entry.payoff).c_str());
  }
  std::printf("\npayoffs given %s:", column.given.c_str());
  for (const auto& entry : column.entries)
    std::printf(" %s %s;", entry.strategy.c_str(), fmt3(entry.payoff).c_str());
  std::fputc('\n', stdout);
}

void print_rankings(const char* header, const std::vector<std::vector<dnt::RankEntry>>& ranks,
                    const std::vector<std::string>& opponent,
                    const std::vector<std::string>& own) {
  std::printf("%s\n", header);
  std::size_t width = 6;
  for (const auto& l : own) width = std::max(width, l.size() + 2);
  for (const auto& l : opponent) width = std::max(width, l.size() + 2);
  print_padded("", width);
  for (const auto& l : opponent) print_padded(l, width);
  std::fputc('\n', stdout);
  for (std::size_t i = 0; i < own.size(); ++i) {
    print_padded(own[i], width);
    for (std::size_t opp = 0; opp < opponent.size(); ++opp) {
      const dnt::RankEntry& e = ranks[opp][i];
      print_padded(std::to_string(e.rank) + (e.tied ? "=" : ""), width);
    }
    std::fputc('\n', stdout);
  }
}

void print_report(const dnt::Report& report) {
  const dnt::BimatrixGame& g = report.game;
  std::size_t width = 18;
  for (const auto& l : g.col_strategies()) width = std::max(width, l.size() + 2);
  std::printf("payoff matrix\n");
  std::size_t row_width = 6;
  for (const auto& l : g.row_strategies()) row_width = std::max(row_width, l.size() + 2);
  print_padded("", row_width);
  for (const auto& l : g.col_strategies()) print_padded(l, width);
  std::fputc('\n', stdout);
  for (std::size_t i = 0; i < g.rows(); ++i) {
    print_padded(g.row_strategies()[i], row_width);
    for (std::size_t j = 0; j < g.cols(); ++j)
      print_padded("(" + fmt3(g.at(i, j).u1) + ", " + fmt3(g.at(i, j).u2) + ")", width);
    std::fputc('\n', stdout);
  }

  std::printf("\nequilibria:");
  if (report.equilibria.empty()) std::printf(" none");
  for (const auto& cell : report.equilibria)
    std::printf(" (%s, %s)", g.row_strategies()[cell.row].c_str(),
                g.col_strategies()[cell.col].c_str());
  std::printf("\n\n");

  print_rankings("rankings of the row player's strategies (= marks a tie)",
                 report.row_rankings, g.col_strategies(), g.row_strategies());
  std::fputc('\n', stdout);
  print_rankings("rankings of the column player's strategies", report.col_rankings,
                 g.row_strategies(), g.col_strategies());

  std::printf("\nbest-response counts:");
  for (std::size_t i = 0; i < g.rows(); ++i)
    std::printf(" %s %d;", g.row_strategies()[i].c_str(), report.row_best_response_counts[i]);
  for (std::size_t j = 0; j < g.cols(); ++j)
    std::printf(" %s %d;", g.col_strategies()[j].c_str(), report.col_best_response_counts[j]);
  std::fputc('\n', stdout);
}

int cmd_run(const GlobalOptions& global, const std::string& file,
            const std::optional<std::string>& column, bool full) {
  const std::string text = dnt::io::read_file(file);
  const dnt::io::DocumentKind kind = dnt::io::detect_kind(text);

  if (kind == dnt::io::DocumentKind::game) {
    if (column)
      throw dnt::DomainError("a ready-made game document has no evaluation cases to run");
    const dnt::Report report = dnt::run_game(dnt::io::parse_game(text));
    if (global.format == "json")
      std::cout << dnt::io::serialize_report(report) << "\n";
    else
      print_report(report);
    return kExitOk;
  }
  if (kind != dnt::io::DocumentKind::scenario)
    throw dnt::ParseError("", "run expects a scenario or game document");

  const dnt::ScenarioSpec spec = dnt::io::parse_scenario(text);
  if (column) {
    const dnt::EvaluationCase* c = nullptr;
    for (const auto& candidate : spec.cases)
      if (candidate.given == *column) c = &candidate;
    if (!c) throw dnt::IncompleteCoverage({"?|" + *column});
    const dnt::CaseColumn result = dnt::build_payoff_column(*c, spec);
    if (global.format == "json") {
      dnt::Report single{dnt::BimatrixGame({"-"}, {"-"}, {{{0, 0}}}), {}, {}, {}, {}, {}, {result}};
      nlohmann::ordered_json j =
          nlohmann::ordered_json::parse(dnt::io::serialize_report(single));
      std::cout << j["columns"][0].dump(2) << "\n";
    } else {
      print_column(result);
    }
    return kExitOk;
  }
  (void)full;  // --full is the default mode for scenarios
  const dnt::Report report = dnt::run_scenario(spec);
  if (global.format == "json")
    std::cout << dnt::io::serialize_report(report) << "\n";
  else
    print_report(report);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// reproduce-paper

int cmd_reproduce(const GlobalOptions& global, const std::optional<std::string>& only,
                  const std::optional<std::string>& perturb) {
  dnt::reproduce::Options options;
  options.only_group = only;
  options.tolerance_override = global.tolerance;
  options.perturb_group = perturb;
  const std::vector<dnt::reproduce::CheckResult> checks = dnt::reproduce::run_checks(options);

  std::size_t failed = 0;
  if (global.format == "json") {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
      out.push_back({{"group", c.group},
                     {"name", c.name},
                     {"expected", c.expected},
                     {"actual", c.actual},
                     {"delta", c.delta},
                     {"tolerance", c.tolerance},
                     {"passed", c.passed}});
      if (!c.passed) ++failed;
    }
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& c : checks) {
      if (!c.passed) ++failed;
      std::printf("[%s] %s: %s expected=%s actual=%s delta=%.2e tol=%.2e\n",
                  c.passed ? " PASS " : " FAIL ", c.group.c_str(), c.name.c_str(),
                  c.expected.c_str(), c.actual.c_str(), c.delta, c.tolerance);
    }
    std::printf("%zu checks, %zu failed\n", checks.size(), failed);
  }
  return failed == 0 ? kExitOk : kExitReproduceFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"D numbers over non-exclusive frames: evidence fusion and "
               "game-theoretic decision analysis"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  GlobalOptions global;
  app.add_option("--format", global.format, "Output format")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();
  app.add_option("--tolerance", global.tolerance,
                 "Override every numeric tolerance of reproduce-paper");

  auto* nonexcl = app.add_subcommand(
      "nonexcl", "Print the non-exclusivity matrix derived from a linguistic scale");
  std::string scale_file;
  nonexcl->add_option("scale", scale_file, "Scale document")->required();

  auto* combine =
      app.add_subcommand("combine", "Fold a list of D numbers with the combination rule");
  std::string dnumbers_file, matrix_file;
  combine->add_option("dnumbers", dnumbers_file, "D numbers document")->required();
  combine->add_option("matrix", matrix_file, "Non-exclusivity matrix document")->required();

  auto* run = app.add_subcommand("run", "Evaluate a scenario or a ready-made game");
  std::string run_file;
  std::optional<std::string> run_column;
  bool run_full = false;
  run->add_option("file", run_file, "Scenario or game document")->required();
  auto* column_opt =
      run->add_option("--column", run_column, "Evaluate one case by its conditioning strategy");
  run->add_flag("--full", run_full, "Full game: matrix, equilibria, rankings, counts")
      ->excludes(column_opt);

  auto* reproduce = app.add_subcommand(
      "reproduce-paper", "Recompute every bundled reference value and report drift");
  std::optional<std::string> only_group, perturb_group;
  reproduce->add_option("--only", only_group, "Run a single check group")
      ->check(CLI::IsMember(dnt::reproduce::group_names()));
  reproduce->add_option("--perturb", perturb_group,
                        "Self-test hook: perturb one input of this group")
      ->check(CLI::IsMember(dnt::reproduce::group_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (*nonexcl) return cmd_nonexcl(global, scale_file);
    if (*combine) return cmd_combine(global, dnumbers_file, matrix_file);
    if (*run) return cmd_run(global, run_file, run_column, run_full);
    if (*reproduce) return cmd_reproduce(global, only_group, perturb_group);
  } catch (const dnt::ParseError& e) {
    error_line("parse", {{"path", e.path()}, {"message", e.what()}});
    return kExitParse;
  } catch (const dnt::IncompleteCoverage& e) {
    error_line("coverage", {{"missing", e.missing()}, {"message", e.what()}});
    return kExitCoverage;
  } catch (const dnt::DomainError& e) {
    error_line("domain", {{"message", e.what()}});
    return kExitDomain;
  } catch (const dnt::Error& e) {
    error_line("domain", {{"message", e.what()}});
    return kExitDomain;
  }
  return kExitOk;
}
