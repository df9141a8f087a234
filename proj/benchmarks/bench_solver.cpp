#include <benchmark/benchmark.h>

#include "dfvs/oracle.hpp"
#include "dfvs/solver.hpp"

namespace {

// Stage one + stage two on sparse random graphs with m = 3n; the empirical
// counterpart of the near-linear per-iteration cost.
void BM_StagesOneAndTwo(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const dfvs::Instance inst = dfvs::random_sparse_digraph(n, 3 * n, 7);
  dfvs::SolverConfig config;
  config.iteration_limit = 0;
  std::size_t size = 0;
  for (auto _ : state) size = dfvs::solve(inst, config).best.size();
  state.counters["dfvs_size"] = static_cast<double>(size);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_StagesOneAndTwo)
    ->RangeMultiplier(4)
    ->Range(1 << 10, 1 << 16)
    ->Unit(benchmark::kMillisecond)
    ->Complexity();

void BM_LocalSearchIteration(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const dfvs::Instance inst = dfvs::random_sparse_digraph(n, 3 * n, 9);
  dfvs::SolverConfig config;
  config.iteration_limit = 0;
  dfvs::BestSolution best = dfvs::solve(inst, config).best;
  dfvs::LocalSearchState ls(1);
  for (auto _ : state)
    best = dfvs::local_search_iteration(best, inst, config, ls);
  state.counters["dfvs_size"] = static_cast<double>(best.size());
}
BENCHMARK(BM_LocalSearchIteration)
    ->RangeMultiplier(4)
    ->Range(1 << 10, 1 << 14)
    ->Unit(benchmark::kMillisecond);

void BM_ExactOracle(benchmark::State& state) {
  const dfvs::Instance inst = dfvs::random_digraph(
      {static_cast<std::size_t>(state.range(0)), 0.3, false, 5});
  for (auto _ : state) benchmark::DoNotOptimize(dfvs::exact_min_dfvs(inst));
}
BENCHMARK(BM_ExactOracle)->DenseRange(8, 16, 4);

}  // namespace
