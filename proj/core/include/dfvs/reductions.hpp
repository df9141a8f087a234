#pragma once

#include <cstddef>
#include <deque>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "dfvs/stop_condition.hpp"
#include "dfvs/tri_graph.hpp"

namespace dfvs {

inline constexpr std::size_t kDefaultDegreeBound = 12;
inline constexpr double kDefaultTriggerFraction = 0.10;
inline constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

/// What a reduction did: vertices forced into the solution (set A), vertices
/// merged away (set B) and erased edges.
struct ReductionOutcome {
  std::vector<Vertex> forced;
  std::vector<Vertex> merged;
  std::size_t edges_erased = 0;
  bool changed = false;

  ReductionOutcome& operator+=(const ReductionOutcome& other);
};

/// Every pair of distinct vertices of s is joined in both directions.
/// Empty and singleton sets qualify.
bool is_diclique(const TriGraph& g, std::span<const Vertex> s);

// Single applications of the eight rules. Each leaves g untouched and
// returns an unchanged outcome when its precondition does not hold.

ReductionOutcome rule1_self_loop(TriGraph& g, Vertex v);
ReductionOutcome rule2_low_degree(TriGraph& g, Vertex v);
ReductionOutcome rule3_bidir_diclique_with_zero_side(TriGraph& g, Vertex v);
ReductionOutcome rule4_cross_scc_edge_pruning(TriGraph& g);
/// subset_bound skips a subset test whose left-hand side is larger than the
/// bound; the full pass uses it to keep the per-edge scan cheap.
ReductionOutcome rule5_edge_dominance(TriGraph& g, Vertex u, Vertex v,
                                      std::size_t subset_bound = kUnbounded);
ReductionOutcome rule6_one_sided_diclique(TriGraph& g, Vertex v);
ReductionOutcome rule7_two_diclique_split(
    TriGraph& g, Vertex v, std::size_t degree_bound = kDefaultDegreeBound);
ReductionOutcome rule8_three_diclique_split(
    TriGraph& g, Vertex v, std::size_t degree_bound = kDefaultDegreeBound);

enum class Cause { kForced, kChosen };

struct StackEntry {
  Vertex vertex;
  Cause cause;
};

/// One Rules 3-8 full pass as seen by the scheduler.
struct FullPassRecord {
  std::optional<std::size_t> edges_at_previous_pass;  // nullopt for the first
  std::size_t edges_at_start = 0;
  std::size_t edges_at_end = 0;
};

/**
 * Decides when the expensive rules run. Rules 1-2 are driven by a FIFO of
 * vertices whose neighborhood changed; Rules 3-8 run as a full pass at the
 * start and then only once the edge count has dropped by trigger_fraction
 * since the previous pass ended.
 */
struct SchedulerState {
  double trigger_fraction = kDefaultTriggerFraction;
  std::size_t degree_bound = kDefaultDegreeBound;
  std::optional<std::size_t> edges_at_last_full_pass;
  std::deque<Vertex> pending;
  std::vector<char> queued;
  std::vector<FullPassRecord> passes;

  bool full_pass_due(std::size_t edge_count) const;
  void enqueue(Vertex v);
};

/// Working graph plus the ordered solution stack. Vertices are either live,
/// merged away or on the stack.
struct SolverState {
  SolverState(TriGraph g, double trigger_fraction = kDefaultTriggerFraction,
              std::size_t degree_bound = kDefaultDegreeBound);

  TriGraph graph;
  std::vector<StackEntry> stack;
  SchedulerState scheduler;
  /// Vertices whose degrees changed since the vertex selector last looked.
  std::vector<Vertex> dirty;

  std::vector<Vertex> take_dirty();
};

/// Applies Rules 1-2 eagerly and Rules 3-8 per the scheduler until nothing
/// more is due. Forced vertices are pushed on state.stack in order. Returns
/// early, leaving a consistent state, once stop is requested.
ReductionOutcome reduce_to_fixpoint(SolverState& state,
                                    const StopCondition& stop = {});

}  // namespace dfvs
