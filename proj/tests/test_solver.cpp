#include <gtest/gtest.h>

#include <thread>

#include "dfvs/oracle.hpp"
#include "dfvs/solver.hpp"
#include "test_support.hpp"

namespace dfvs {
namespace {

using testing::graph_1based;
using testing::instance_1based;

std::vector<Vertex> ids(const BestSolution& s) { return s.vertices; }

TEST(Scoring, ProductExamples) {
  // Vertex 1: out-only {2,3,4}, in-only {5,6}, bidirectional {7}.
  const TriGraph g = graph_1based(
      7, {{1, 2}, {1, 3}, {1, 4}, {5, 1}, {6, 1}, {1, 7}, {7, 1}});
  EXPECT_EQ(score_product(g, 1), 12u);
  EXPECT_EQ(score_product(graph_1based(1, {}), 1), 0u);
  const TriGraph two = graph_1based(3, {{1, 2}, {2, 1}, {1, 3}, {3, 1}});
  EXPECT_EQ(score_product(two, 1), 4u);
}

TEST(Scoring, LexicographicBidirDominates) {
  // Vertex 1: d± = 1, d- = d+ = 5. Vertex 2: d± = 0, d- = d+ = 100.
  TriGraph g(300);
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(10 + i, 1);
    g.add_edge(1, 20 + i);
  }
  g.add_edge(1, 30);
  g.add_edge(30, 1);
  for (Vertex i = 0; i < 100; ++i) {
    g.add_edge(100 + i, 2);
    g.add_edge(2, 200 + i);
  }
  ASSERT_EQ(g.bidir_degree(2), 0u);
  EXPECT_GT(score_lexicographic(g, 1), score_lexicographic(g, 2));
  EXPECT_EQ(select_best(g, Criterion::kLexicographic), 1);
  EXPECT_EQ(select_best(g, Criterion::kProduct), 2);

  const TriGraph pair = graph_1based(3, {{1, 2}, {2, 1}, {1, 3}, {3, 1}});
  EXPECT_EQ(score_lexicographic(pair, 1),
            (std::pair<std::uint64_t, std::uint64_t>{2, 0}));
}

TEST(Scoring, TiesGoToSmallestId) {
  const TriGraph g = graph_1based(4, {{1, 2}, {2, 1}, {3, 4}, {4, 3}});
  EXPECT_EQ(select_best(g, Criterion::kProduct), 1);
  EXPECT_EQ(select_best(g, Criterion::kLexicographic), 1);
}

TEST(ConstructSolution, Examples) {
  SolverState tri(graph_1based(3, {{1, 2}, {2, 3}, {3, 1}}));
  EXPECT_TRUE(construct_solution(tri, Criterion::kProduct));
  ASSERT_EQ(tri.stack.size(), 1u);
  EXPECT_EQ(tri.stack[0].cause, Cause::kForced);

  SolverState pairs(graph_1based(4, {{1, 2}, {2, 1}, {3, 4}, {4, 3}}));
  EXPECT_TRUE(construct_solution(pairs, Criterion::kProduct));
  EXPECT_EQ(pairs.stack.size(), 2u);

  SolverState empty(TriGraph(0));
  EXPECT_TRUE(construct_solution(empty, Criterion::kProduct));
  EXPECT_TRUE(empty.stack.empty());
}

TEST(ConstructSolution, PicksMatchLinearScan) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const TriGraph g = testing::random_tri_graph(40, 0.12, seed);
    for (Criterion c : {Criterion::kProduct, Criterion::kLexicographic}) {
      SolverState heap(g);
      construct_solution(heap, c);

      SolverState scan(g);
      while (true) {
        reduce_to_fixpoint(scan);
        if (scan.graph.empty()) break;
        const Vertex v = select_best(scan.graph, c);
        scan.graph.remove_vertex(v);
        scan.stack.push_back({v, Cause::kChosen});
      }
      ASSERT_EQ(heap.stack.size(), scan.stack.size()) << "seed " << seed;
      for (std::size_t i = 0; i < heap.stack.size(); ++i)
        ASSERT_EQ(heap.stack[i].vertex, scan.stack[i].vertex);
    }
  }
}

TEST(ScoringProperty, ProductBoundsAndZeros) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const TriGraph g = testing::random_tri_graph(15, 0.15, seed);
    for (Vertex v : g.live_vertices()) {
      const std::uint64_t both = g.bidir_degree(v);
      const std::uint64_t s = score_product(g, v);
      EXPECT_GE(s, both * both);
      const bool one_side_empty = g.out_degree(v) + both == 0 ||
                                  g.in_degree(v) + both == 0;
      EXPECT_EQ(s == 0, one_side_empty);
    }
  }
}

TEST(PruneRedundant, Examples) {
  const Instance g = instance_1based(
      5, {{1, 2}, {2, 3}, {3, 1}, {3, 4}, {4, 5}, {5, 3}});
  const std::vector<StackEntry> stack{{1, Cause::kChosen}, {3, Cause::kChosen}};
  EXPECT_EQ(ids(prune_redundant(g, stack)), (std::vector<Vertex>{3}));
  EXPECT_EQ(exact_min_dfvs(g).size(), 1u);

  const std::vector<StackEntry> tight{{3, Cause::kChosen}};
  EXPECT_EQ(ids(prune_redundant(g, tight)), (std::vector<Vertex>{3}));

  const Instance dag = instance_1based(3, {{1, 2}, {2, 3}});
  const std::vector<StackEntry> all{{1, Cause::kChosen}, {2, Cause::kForced},
                                    {3, Cause::kChosen}};
  EXPECT_TRUE(prune_redundant(dag, all).vertices.empty());
}

TEST(PruneRedundant, FaultsWhenRemainderIsCyclic) {
  const Instance tri = instance_1based(3, {{1, 2}, {2, 3}, {3, 1}});
  EXPECT_THROW(prune_redundant(tri, {}), std::logic_error);
}

TEST(PruneRedundant, ResultIsOneMinimal) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Instance inst = random_digraph({12, 0.25, false, seed});
    // A deliberately redundant start: every vertex.
    std::vector<StackEntry> stack;
    for (Vertex v = 0; v < 12; ++v) stack.push_back({v, Cause::kChosen});
    const BestSolution s = prune_redundant(inst, stack);
    ASSERT_TRUE(is_valid_dfvs(inst, s.vertices));
    for (std::size_t i = 0; i < s.size(); ++i) {
      std::vector<Vertex> fewer = s.vertices;
      fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(i));
      ASSERT_FALSE(is_valid_dfvs(inst, fewer)) << "seed " << seed;
    }
  }
}

TEST(RestoreCount, RoundsUpAndFreesAtLeastOne) {
  EXPECT_EQ(restore_count(0, 0.3), 0u);
  EXPECT_EQ(restore_count(1, 0.3), 1u);
  EXPECT_EQ(restore_count(4, 0.3), 2u);
  EXPECT_EQ(restore_count(10, 0.3), 3u);
  EXPECT_EQ(restore_count(11, 0.3), 4u);
  EXPECT_EQ(restore_count(5, 0.99), 5u);
}

TEST(LocalSearch, OptimalTriangleIsKept) {
  const Instance tri = instance_1based(3, {{1, 2}, {2, 3}, {3, 1}});
  SolverConfig config;
  LocalSearchState ls(1);
  IterationRecord rec;
  const BestSolution best{{2}};
  const BestSolution next =
      local_search_iteration(best, tri, config, ls, {}, &rec);
  EXPECT_EQ(next.size(), 1u);
  EXPECT_TRUE(rec.accepted);
  EXPECT_EQ(rec.freed, 1u);
}

TEST(LocalSearch, ImprovesSuboptimalSolution) {
  const Instance pair = instance_1based(2, {{1, 2}, {2, 1}});
  SolverConfig config;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    LocalSearchState ls(seed);
    const BestSolution next =
        local_search_iteration(BestSolution{{1, 2}}, pair, config, ls);
    EXPECT_EQ(next.size(), 1u);
    EXPECT_TRUE(is_valid_dfvs(pair, next.vertices));
  }
}

TEST(LocalSearch, EmptySolutionIsANoOp) {
  const Instance dag = instance_1based(2, {{1, 2}});
  SolverConfig config;
  LocalSearchState ls(0);
  EXPECT_TRUE(local_search_iteration({}, dag, config, ls).vertices.empty());
}

TEST(Solve, Examples) {
  SolverConfig config;
  config.iteration_limit = 5;
  const Instance dag = instance_1based(3, {{1, 2}, {2, 3}, {1, 3}});
  const SolveResult a = solve(dag, config);
  EXPECT_TRUE(a.best.vertices.empty());
  EXPECT_EQ(a.iterations, 0u);

  const Instance loop = instance_1based(1, {{1, 1}});
  EXPECT_EQ(solve(loop, config).best.vertices, (std::vector<Vertex>{1}));
}

TEST(Solve, ZeroIterationsReturnsStageTwo) {
  const Instance inst = random_digraph({30, 0.1, false, 4});
  SolverConfig config;
  config.iteration_limit = 0;
  const SolveResult r = solve(inst, config);
  EXPECT_EQ(r.iterations, 0u);
  EXPECT_EQ(r.best.vertices, r.stage_two.vertices);
}

TEST(Solve, MatchesOracleOnSmallGraphs) {
  SolverConfig config;
  config.iteration_limit = 100;
  int optimal = 0;
  const int total = 60;
  for (int i = 0; i < total; ++i) {
    const Instance inst =
        random_digraph({10, i % 2 ? 0.3 : 0.2, false, 500u + i});
    config.seed = static_cast<std::uint64_t>(i);
    const SolveResult r = solve(inst, config);
    ASSERT_TRUE(is_valid_dfvs(inst, r.best.vertices));
    const std::size_t opt = exact_min_dfvs(inst).size();
    ASSERT_LE(r.best.size(), opt + 1);
    optimal += r.best.size() == opt;
  }
  EXPECT_GE(optimal, total * 95 / 100);
}

TEST(Solve, DeterministicForFixedSeed) {
  const Instance inst = random_digraph({40, 0.1, false, 77});
  SolverConfig config;
  config.iteration_limit = 30;
  config.seed = 123;
  const SolveResult a = solve(inst, config);
  const SolveResult b = solve(inst, config);
  EXPECT_EQ(a.best.vertices, b.best.vertices);
  ASSERT_EQ(a.history.size(), b.history.size());
  for (std::size_t i = 0; i < a.history.size(); ++i)
    EXPECT_EQ(a.history[i].candidate_size, b.history[i].candidate_size);
}

TEST(Solve, HistoryIsMonotone) {
  const Instance inst = random_digraph({60, 0.08, false, 5});
  SolverConfig config;
  config.iteration_limit = 50;
  const SolveResult r = solve(inst, config);
  std::size_t prev = r.stage_two_size;
  for (const IterationRecord& rec : r.history) {
    EXPECT_LE(rec.best_size, prev);
    prev = rec.best_size;
  }
  EXPECT_EQ(prev, r.best.size());
}

TEST(Solve, PresetCancellationStillReturnsValidSolution) {
  const Instance inst = random_sparse_digraph(5000, 15000, 3);
  std::atomic<bool> cancel{true};
  SolverConfig config;
  const SolveResult r = solve(inst, config, &cancel);
  EXPECT_TRUE(r.interrupted);
  EXPECT_EQ(r.iterations, 0u);
  EXPECT_TRUE(is_valid_dfvs(inst, r.best.vertices));
}

TEST(Solve, RespectsTimeLimit) {
  const Instance inst = random_sparse_digraph(3000, 9000, 8);
  SolverConfig config;
  config.time_limit = std::chrono::duration<double>(0.3);
  const auto t0 = Clock::now();
  const SolveResult r = solve(inst, config);
  const double seconds =
      std::chrono::duration<double>(Clock::now() - t0).count();
  EXPECT_LT(seconds, 1.5);
  EXPECT_TRUE(is_valid_dfvs(inst, r.best.vertices));
}

TEST(SolverConfig, RejectsOutOfRangeFractions) {
  SolverConfig c;
  c.trigger_fraction = 0.3;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c.trigger_fraction = 0.1;
  c.restore_fraction = 1.0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c.restore_fraction = 0.3;
  EXPECT_NO_THROW(c.validate());
}

}  // namespace
}  // namespace dfvs
