#include "dfvs/reductions.hpp"

#include <algorithm>
#include <array>
#include <cstdint>

namespace dfvs {

ReductionOutcome& ReductionOutcome::operator+=(const ReductionOutcome& other) {
  forced.insert(forced.end(), other.forced.begin(), other.forced.end());
  merged.insert(merged.end(), other.merged.begin(), other.merged.end());
  edges_erased += other.edges_erased;
  changed = changed || other.changed;
  return *this;
}

bool is_diclique(const TriGraph& g, std::span<const Vertex> s) {
  const std::size_t need = s.empty() ? 0 : s.size() - 1;
  for (Vertex x : s)
    if (g.bidir(x).size() < need) return false;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.bidir(s[i]).contains(s[j])) return false;
  return true;
}

namespace {

std::vector<Vertex> sorted(const NeighborSet& s) {
  std::vector<Vertex> out(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> sorted_union(const NeighborSet& a, const NeighborSet& b) {
  std::vector<Vertex> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool mergeable(const TriGraph& g, Vertex v) {
  return g.is_live(v) && !g.self_loop(v);
}

// Merge v, then consume any self-loop the merge created.
void merge_with_cascade(TriGraph& g, Vertex v, ReductionOutcome& out) {
  const std::vector<Vertex> loops = g.merge_vertex(v);
  out.merged.push_back(v);
  out.changed = true;
  for (Vertex l : loops) {
    g.remove_vertex(l);
    out.forced.push_back(l);
  }
}

// adjacency[i] has bit j set iff nb[i] and nb[j] are joined both ways.
std::vector<std::uint32_t> bidir_bitmasks(const TriGraph& g,
                                          std::span<const Vertex> nb) {
  std::vector<std::uint32_t> adj(nb.size(), 0);
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j)
      if (g.bidir(nb[i]).contains(nb[j])) {
        adj[i] |= 1u << j;
        adj[j] |= 1u << i;
      }
  return adj;
}

// Can every vertex outside `fixed` be placed so that all vertices end up in
// at most `parts` dicliques, with `fixed` (itself a diclique) inside part 0?
class CliqueCover {
 public:
  CliqueCover(std::span<const std::uint32_t> adj, std::uint32_t fixed,
              int parts)
      : adj_(adj), parts_(parts) {
    for (std::size_t i = 0; i < adj.size(); ++i)
      if (!(fixed >> i & 1u)) order_.push_back(static_cast<int>(i));
    if (fixed != 0) {
      part_[0] = fixed;
      used_ = 1;
    }
  }

  bool solve() { return place(0); }

 private:
  bool place(std::size_t idx) {
    if (idx == order_.size()) return true;
    const int i = order_[idx];
    const std::uint32_t bit = 1u << i;
    for (int p = 0; p < used_; ++p) {
      if ((adj_[i] & part_[p]) != part_[p]) continue;
      part_[p] |= bit;
      if (place(idx + 1)) return true;
      part_[p] &= ~bit;
    }
    if (used_ < parts_) {
      part_[used_++] = bit;
      if (place(idx + 1)) return true;
      part_[--used_] = 0;
    }
    return false;
  }

  std::span<const std::uint32_t> adj_;
  int parts_;
  std::vector<int> order_;
  std::array<std::uint32_t, 3> part_{};
  int used_ = 0;
};

}  // namespace

ReductionOutcome rule1_self_loop(TriGraph& g, Vertex v) {
  ReductionOutcome out;
  if (!g.is_live(v) || !g.self_loop(v)) return out;
  g.remove_vertex(v);
  out.forced.push_back(v);
  out.changed = true;
  return out;
}

ReductionOutcome rule2_low_degree(TriGraph& g, Vertex v) {
  ReductionOutcome out;
  if (!mergeable(g, v)) return out;
  const std::size_t both = g.bidir_degree(v);
  if (g.in_degree(v) + both <= 1 || g.out_degree(v) + both <= 1)
    merge_with_cascade(g, v, out);
  return out;
}

ReductionOutcome rule3_bidir_diclique_with_zero_side(TriGraph& g, Vertex v) {
  ReductionOutcome out;
  if (!mergeable(g, v)) return out;
  if (std::min(g.in_degree(v), g.out_degree(v)) != 0) return out;
  const std::vector<Vertex> both = sorted(g.bidir(v));
  if (!is_diclique(g, both)) return out;
  for (Vertex u : both) {
    g.remove_vertex(u);
    out.forced.push_back(u);
  }
  merge_with_cascade(g, v, out);
  return out;
}

ReductionOutcome rule4_cross_scc_edge_pruning(TriGraph& g) {
  ReductionOutcome out;
  const std::vector<int> comp =
      strongly_connected_components(g, SccEdges::kOneDirectionalOnly);
  std::vector<std::pair<Vertex, Vertex>> doomed;
  for (Vertex u : g.live_vertices())
    for (Vertex v : g.out_only(u))
      if (comp[u] != comp[v]) doomed.emplace_back(u, v);
  for (const auto& [u, v] : doomed) g.erase_edge(u, v);
  out.edges_erased = doomed.size();
  out.changed = !doomed.empty();
  return out;
}

ReductionOutcome rule5_edge_dominance(TriGraph& g, Vertex u, Vertex v,
                                      std::size_t subset_bound) {
  ReductionOutcome out;
  if (!g.is_live(u) || !g.is_live(v) || !g.out_only(u).contains(v)) return out;

  bool dominated = false;
  const NeighborSet& preds_u = g.in_only(u);
  if (preds_u.size() <= subset_bound) {
    dominated = std::all_of(preds_u.begin(), preds_u.end(), [&](Vertex w) {
      return g.in_only(v).contains(w) || g.bidir(v).contains(w);
    });
  }
  const NeighborSet& succs_v = g.out_only(v);
  if (!dominated && succs_v.size() <= subset_bound) {
    dominated = std::all_of(succs_v.begin(), succs_v.end(), [&](Vertex w) {
      return g.out_only(u).contains(w) || g.bidir(u).contains(w);
    });
  }
  if (dominated) {
    g.erase_edge(u, v);
    out.edges_erased = 1;
    out.changed = true;
  }
  return out;
}

ReductionOutcome rule6_one_sided_diclique(TriGraph& g, Vertex v) {
  ReductionOutcome out;
  if (!mergeable(g, v)) return out;
  if (is_diclique(g, sorted_union(g.out_only(v), g.bidir(v))) ||
      is_diclique(g, sorted_union(g.in_only(v), g.bidir(v))))
    merge_with_cascade(g, v, out);
  return out;
}

ReductionOutcome rule7_two_diclique_split(TriGraph& g, Vertex v,
                                          std::size_t degree_bound) {
  ReductionOutcome out;
  if (!mergeable(g, v)) return out;
  const std::size_t degree = g.total_degree(v);
  if (degree > degree_bound || degree > 31) return out;

  // Bidirectional neighbors first so they occupy the low bits.
  std::vector<Vertex> nb = sorted(g.bidir(v));
  const std::size_t pinned = nb.size();
  const std::vector<Vertex> rest = sorted_union(g.in_only(v), g.out_only(v));
  nb.insert(nb.end(), rest.begin(), rest.end());
  const std::vector<std::uint32_t> adj = bidir_bitmasks(g, nb);

  const std::uint32_t fixed =
      pinned == 0 ? 0u : static_cast<std::uint32_t>((1ull << pinned) - 1);
  for (std::size_t i = 0; i < pinned; ++i)
    if (((adj[i] | (1u << i)) & fixed) != fixed) return out;

  if (CliqueCover(adj, fixed, 2).solve()) merge_with_cascade(g, v, out);
  return out;
}

ReductionOutcome rule8_three_diclique_split(TriGraph& g, Vertex v,
                                            std::size_t degree_bound) {
  ReductionOutcome out;
  if (!mergeable(g, v) || g.bidir_degree(v) != 0) return out;
  const std::size_t degree = g.total_degree(v);
  if (degree > degree_bound || degree > 31) return out;

  const std::vector<Vertex> nb = sorted_union(g.in_only(v), g.out_only(v));
  const std::vector<std::uint32_t> adj = bidir_bitmasks(g, nb);
  if (CliqueCover(adj, 0, 3).solve()) merge_with_cascade(g, v, out);
  return out;
}

bool SchedulerState::full_pass_due(std::size_t edge_count) const {
  if (!edges_at_last_full_pass) return true;
  const std::size_t last = *edges_at_last_full_pass;
  return edge_count < last &&
         static_cast<double>(edge_count) <=
             (1.0 - trigger_fraction) * static_cast<double>(last);
}

void SchedulerState::enqueue(Vertex v) {
  if (static_cast<std::size_t>(v) >= queued.size()) queued.resize(v + 1, 0);
  if (queued[v]) return;
  queued[v] = 1;
  pending.push_back(v);
}

SolverState::SolverState(TriGraph g, double trigger_fraction,
                         std::size_t degree_bound)
    : graph(std::move(g)) {
  scheduler.trigger_fraction = trigger_fraction;
  scheduler.degree_bound = degree_bound;
  scheduler.queued.assign(graph.capacity(), 0);
  graph.set_change_tracking(true);
  graph.take_touched();
  for (Vertex v : graph.live_vertices()) {
    scheduler.enqueue(v);
    dirty.push_back(v);
  }
}

std::vector<Vertex> SolverState::take_dirty() {
  std::vector<Vertex> out;
  out.swap(dirty);
  return out;
}

namespace {

class Reducer {
 public:
  Reducer(SolverState& state, const StopCondition& stop)
      : s_(state), g_(state.graph), stop_(stop) {}

  ReductionOutcome run() {
    drain_touched();
    if (!run_queue()) return std::move(total_);
    while (!g_.empty() && s_.scheduler.full_pass_due(g_.edge_count())) {
      if (stop_.stop_requested()) break;
      FullPassRecord rec;
      rec.edges_at_previous_pass = s_.scheduler.edges_at_last_full_pass;
      rec.edges_at_start = g_.edge_count();
      const bool finished = full_pass();
      rec.edges_at_end = g_.edge_count();
      // Loss is counted from where the pass left the graph.
      s_.scheduler.edges_at_last_full_pass = rec.edges_at_end;
      s_.scheduler.passes.push_back(rec);
      if (!finished) break;
    }
    return std::move(total_);
  }

 private:
  void absorb(const ReductionOutcome& o) {
    if (!o.changed) return;
    for (Vertex f : o.forced) s_.stack.push_back({f, Cause::kForced});
    total_ += o;
    drain_touched();
  }

  void drain_touched() {
    for (Vertex v : g_.take_touched()) {
      if (!g_.is_live(v)) continue;
      s_.scheduler.enqueue(v);
      s_.dirty.push_back(v);
    }
  }

  bool poll() {
    return (++polls_ & 63u) != 0 || !stop_.stop_requested();
  }

  // Rules 1-2 over the pending queue. False if interrupted.
  bool run_queue() {
    auto& q = s_.scheduler.pending;
    while (!q.empty()) {
      if (!poll()) return false;
      const Vertex v = q.front();
      q.pop_front();
      s_.scheduler.queued[v] = 0;
      if (!g_.is_live(v)) continue;
      ReductionOutcome o = rule1_self_loop(g_, v);
      if (!o.changed) o = rule2_low_degree(g_, v);
      absorb(o);
    }
    return true;
  }

  template <typename Fn>
  bool per_vertex(Fn&& fn) {
    for (Vertex v : g_.live_vertices()) {
      if (!poll()) return false;
      if (!g_.is_live(v) || g_.self_loop(v)) continue;
      absorb(fn(v));
      if (!run_queue()) return false;
    }
    return true;
  }

  // Rules 4, 5, 3, 6, 7, 8 in that order.
  bool full_pass() {
    const std::size_t bound = s_.scheduler.degree_bound;
    absorb(rule4_cross_scc_edge_pruning(g_));
    if (!run_queue()) return false;

    const bool rule5_done = per_vertex([&](Vertex u) {
      ReductionOutcome acc;
      for (Vertex v : sorted(g_.out_only(u)))
        acc += rule5_edge_dominance(g_, u, v, bound);
      return acc;
    });
    if (!rule5_done) return false;

    if (!per_vertex([&](Vertex v) {
          return rule3_bidir_diclique_with_zero_side(g_, v);
        }))
      return false;
    if (!per_vertex([&](Vertex v) {
          if (g_.total_degree(v) > bound) return ReductionOutcome{};
          return rule6_one_sided_diclique(g_, v);
        }))
      return false;
    if (!per_vertex(
            [&](Vertex v) { return rule7_two_diclique_split(g_, v, bound); }))
      return false;
    return per_vertex(
        [&](Vertex v) { return rule8_three_diclique_split(g_, v, bound); });
  }

  SolverState& s_;
  TriGraph& g_;
  const StopCondition& stop_;
  ReductionOutcome total_;
  unsigned polls_ = 0;
};

}  // namespace

ReductionOutcome reduce_to_fixpoint(SolverState& state,
                                    const StopCondition& stop) {
  return Reducer(state, stop).run();
}

}  // namespace dfvs
