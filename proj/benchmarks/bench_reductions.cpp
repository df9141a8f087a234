#include <benchmark/benchmark.h>

#include "dfvs/oracle.hpp"
#include "dfvs/reductions.hpp"

namespace {

dfvs::Instance sparse(std::int64_t n) {
  return dfvs::random_sparse_digraph(static_cast<std::size_t>(n),
                                     static_cast<std::size_t>(3 * n), 42);
}

void BM_BuildTriGraph(benchmark::State& state) {
  const dfvs::Instance inst = sparse(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dfvs::to_tri_graph(inst));
  state.SetItemsProcessed(state.iterations() * inst.edge_count());
}
BENCHMARK(BM_BuildTriGraph)->Range(1 << 10, 1 << 16);

void BM_Scc(benchmark::State& state) {
  const dfvs::TriGraph g = dfvs::to_tri_graph(sparse(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(dfvs::strongly_connected_components(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Scc)->Range(1 << 10, 1 << 16)->Complexity(benchmark::oN);

void BM_Rule4(benchmark::State& state) {
  const dfvs::TriGraph g = dfvs::to_tri_graph(sparse(state.range(0)));
  for (auto _ : state) {
    state.PauseTiming();
    dfvs::TriGraph h = g;
    state.ResumeTiming();
    benchmark::DoNotOptimize(dfvs::rule4_cross_scc_edge_pruning(h));
  }
}
BENCHMARK(BM_Rule4)->Range(1 << 10, 1 << 15);

void BM_ReduceToFixpoint(benchmark::State& state) {
  const dfvs::TriGraph g = dfvs::to_tri_graph(sparse(state.range(0)));
  for (auto _ : state) {
    state.PauseTiming();
    dfvs::SolverState s(g);
    state.ResumeTiming();
    benchmark::DoNotOptimize(dfvs::reduce_to_fixpoint(s));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ReduceToFixpoint)->Range(1 << 10, 1 << 15)->Complexity();

}  // namespace
