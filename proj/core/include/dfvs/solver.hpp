#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "dfvs/instance.hpp"
#include "dfvs/reductions.hpp"
#include "dfvs/stop_condition.hpp"

namespace dfvs {

enum class ScoringMode {
  kProduct,        // (d+ + d±) * (d- + d±)
  kLexicographic,  // d± first, then d- * d+
  kAlternate       // product for stage one, alternating per local search
};

struct SolverConfig {
  std::uint64_t seed = 0;
  /// Wall-clock budget; ignored when iteration_limit is set.
  std::optional<std::chrono::duration<double>> time_limit;
  /// Number of local-search iterations T.
  std::optional<std::size_t> iteration_limit;
  double trigger_fraction = kDefaultTriggerFraction;
  double restore_fraction = 0.30;
  std::size_t degree_bound = kDefaultDegreeBound;
  ScoringMode scoring_mode = ScoringMode::kAlternate;

  /// Throws std::invalid_argument on out-of-range fractions.
  void validate() const;
};

std::uint64_t score_product(const TriGraph& g, Vertex v);
std::pair<std::uint64_t, std::uint64_t> score_lexicographic(const TriGraph& g,
                                                            Vertex v);

/// Concrete criterion used by one construction run.
enum class Criterion { kProduct, kLexicographic };

/// Live vertex maximizing the criterion, ties to the smallest id. Linear scan;
/// construct_solution uses an incremental heap with the same ordering.
Vertex select_best(const TriGraph& g, Criterion criterion);

/// Feedback vertex set as sorted internal indices (external id = index + 1).
struct BestSolution {
  std::vector<Vertex> vertices;
  std::size_t size() const { return vertices.size(); }
};

/// Stage one: reduce, pick the best vertex, repeat until the graph is empty.
/// Returns false if stopped early; the stack plus the remaining live
/// vertices is still a feedback vertex set in that case.
bool construct_solution(SolverState& state, Criterion criterion,
                        const StopCondition& stop = {});

/// Stage two over the solution stack, newest entry first.
BestSolution prune_redundant(const Instance& inst,
                             std::span<const StackEntry> stack,
                             const StopCondition& stop = {});

/// Tries to restore the vertices of `order` (a subset of `solution`) one by
/// one, dropping each whose return leaves the remainder acyclic. Throws
/// std::logic_error if inst minus solution is not acyclic. Stopping early
/// keeps the result valid.
BestSolution prune_in_order(const Instance& inst,
                            std::span<const Vertex> solution,
                            std::span<const Vertex> order,
                            const StopCondition& stop = {});

struct IterationRecord {
  std::size_t freed = 0;
  std::size_t candidate_size = 0;
  bool pruned = false;
  bool accepted = false;
  bool completed = false;
  std::size_t best_size = 0;
};

/// Mutable state carried across local-search iterations.
struct LocalSearchState {
  explicit LocalSearchState(std::uint64_t seed) : rng(seed) {}

  std::mt19937_64 rng;
  std::size_t iteration = 0;
  std::optional<Clock::duration> last_prune_cost;
};

/// Number of solution vertices freed per local-search iteration.
std::size_t restore_count(std::size_t best_size, double restore_fraction);

/// Stage three, one step: free a random part of best, re-solve the graph
/// without the kept part and accept the candidate if it is not larger.
BestSolution local_search_iteration(const BestSolution& best,
                                    const Instance& inst,
                                    const SolverConfig& config,
                                    LocalSearchState& ls,
                                    const StopCondition& stop = {},
                                    IterationRecord* record = nullptr);

struct SolveResult {
  BestSolution best;
  std::size_t stage_one_size = 0;
  std::size_t stage_two_size = 0;
  bool stage_one_complete = false;
  bool interrupted = false;
  std::size_t iterations = 0;
  std::vector<IterationRecord> history;
  std::vector<FullPassRecord> stage_one_passes;
  /// Stage two output before any local search.
  BestSolution stage_two;
};

/// All three stages. Always returns a valid feedback vertex set; setting
/// *cancel ends the run at the next polling point.
SolveResult solve(const Instance& inst, const SolverConfig& config,
                  const std::atomic<bool>* cancel = nullptr);

/// O(V + E) check that inst minus the solution is acyclic (Kahn).
bool remainder_is_acyclic(const Instance& inst,
                          std::span<const Vertex> solution);

}  // namespace dfvs
