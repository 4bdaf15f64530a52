#include <benchmark/benchmark.h>

#include <random>

#include "dnt/dnumbers.hpp"
#include "dnt/pipeline.hpp"
#include "dnt/reference.hpp"

namespace {

void BM_NonexclMatrixFromScale(benchmark::State& state) {
  const dnt::LinguisticScale scale = dnt::reference::scale();
  for (auto _ : state) {
    auto m = dnt::build_nonexcl_from_scale(scale);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_NonexclMatrixFromScale);

void BM_EcrCombine(benchmark::State& state) {
  const auto& ex = dnt::reference::combination_example();
  for (auto _ : state) {
    auto d = dnt::ecr_combine(ex.d1, ex.d2, ex.matrix);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_EcrCombine);

void BM_WacFoldSixCriteria(benchmark::State& state) {
  const dnt::ScenarioSpec spec = dnt::reference::dispute_scenario();
  const dnt::NonExclusivityMatrix matrix = dnt::build_nonexcl_from_scale(spec.scale);
  const dnt::DFrame frame(spec.scale.labels());
  std::vector<dnt::DNumber> cells;
  std::vector<double> ws;
  for (const auto& [criterion, weight] : dnt::normalize_weights(spec.weights)) {
    cells.push_back(dnt::from_linguistic_votes(
        spec.cases[0].votes.at("AS1").at(criterion), frame));
    ws.push_back(weight);
  }
  for (auto _ : state) {
    auto d = dnt::wac_combine(cells, ws, matrix);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_WacFoldSixCriteria);

void BM_PayoffColumn(benchmark::State& state) {
  const dnt::ScenarioSpec spec = dnt::reference::dispute_scenario();
  for (auto _ : state) {
    auto column = dnt::build_payoff_column(spec.cases[0], spec);
    benchmark::DoNotOptimize(column);
  }
}
BENCHMARK(BM_PayoffColumn);

void BM_PureNashEquilibria(benchmark::State& state) {
  std::mt19937 rng(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::vector<std::string> rows, cols;
  for (std::size_t i = 0; i < n; ++i) {
    rows.push_back("R" + std::to_string(i));
    cols.push_back("C" + std::to_string(i));
  }
  std::vector<std::vector<dnt::PayoffPair>> cells(n, std::vector<dnt::PayoffPair>(n));
  for (auto& row : cells)
    for (auto& cell : row) cell = {u(rng), u(rng)};
  const dnt::BimatrixGame game(rows, cols, cells);
  for (auto _ : state) {
    auto eq = dnt::pure_nash_equilibria(game);
    benchmark::DoNotOptimize(eq);
  }
}
BENCHMARK(BM_PureNashEquilibria)->Arg(8)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
