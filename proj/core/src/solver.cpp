#include "dfvs/solver.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>

#include "dfvs/incremental_dag.hpp"

namespace dfvs {

void SolverConfig::validate() const {
  if (!(trigger_fraction >= 0.05 && trigger_fraction <= 0.25))
    throw std::invalid_argument("trigger fraction must lie in [0.05, 0.25]");
  if (!(restore_fraction > 0.0 && restore_fraction < 1.0))
    throw std::invalid_argument("restore fraction must lie in (0, 1)");
  if (time_limit && !(time_limit->count() >= 0.0))
    throw std::invalid_argument("time limit must be non-negative");
}

std::uint64_t score_product(const TriGraph& g, Vertex v) {
  const std::uint64_t both = g.bidir_degree(v);
  return (g.out_degree(v) + both) * (g.in_degree(v) + both);
}

std::pair<std::uint64_t, std::uint64_t> score_lexicographic(const TriGraph& g,
                                                            Vertex v) {
  return {g.bidir_degree(v),
          static_cast<std::uint64_t>(g.in_degree(v)) * g.out_degree(v)};
}

namespace {

using Key = std::pair<std::uint64_t, std::uint64_t>;

Key key_of(const TriGraph& g, Vertex v, Criterion c) {
  if (c == Criterion::kProduct) return {score_product(g, v), 0};
  return score_lexicographic(g, v);
}

// Lazy max-heap over (key, smallest id). Entries go stale when a vertex dies
// or its degrees change; every change is re-pushed through refresh().
class VertexSelector {
 public:
  explicit VertexSelector(Criterion c) : criterion_(c) {}

  void refresh(const TriGraph& g, std::span<const Vertex> changed) {
    for (Vertex v : changed)
      if (g.is_live(v)) heap_.push({key_of(g, v, criterion_), v});
  }

  Vertex pop_best(const TriGraph& g) {
    while (!heap_.empty()) {
      const Entry top = heap_.top();
      heap_.pop();
      if (g.is_live(top.v) && key_of(g, top.v, criterion_) == top.key)
        return top.v;
    }
    throw std::logic_error("vertex selector ran dry on a non-empty graph");
  }

 private:
  struct Entry {
    Key key;
    Vertex v;
    bool operator<(const Entry& o) const {
      if (key != o.key) return key < o.key;
      return v > o.v;
    }
  };
  Criterion criterion_;
  std::priority_queue<Entry> heap_;
};

Criterion criterion_for(ScoringMode mode, std::size_t iteration) {
  switch (mode) {
    case ScoringMode::kProduct:
      return Criterion::kProduct;
    case ScoringMode::kLexicographic:
      return Criterion::kLexicographic;
    case ScoringMode::kAlternate:
      break;
  }
  return iteration % 2 == 0 ? Criterion::kProduct : Criterion::kLexicographic;
}

std::vector<Vertex> stack_vertices(const SolverState& st) {
  std::vector<Vertex> out;
  out.reserve(st.stack.size());
  for (const StackEntry& e : st.stack) out.push_back(e.vertex);
  return out;
}

void require_valid(const Instance& inst, std::span<const Vertex> sol,
                   const char* where) {
  if (!remainder_is_acyclic(inst, sol))
    throw std::logic_error(std::string(where) +
                           ": solution leaves a cycle in the instance");
}

}  // namespace

Vertex select_best(const TriGraph& g, Criterion criterion) {
  Vertex best = -1;
  Key best_key{};
  for (Vertex v : g.live_vertices()) {
    const Key k = key_of(g, v, criterion);
    if (best < 0 || k > best_key) {
      best = v;
      best_key = k;
    }
  }
  return best;
}

bool construct_solution(SolverState& state, Criterion criterion,
                        const StopCondition& stop) {
  VertexSelector selector(criterion);
  while (true) {
    reduce_to_fixpoint(state, stop);
    if (stop.stop_requested()) return state.graph.empty();
    if (state.graph.empty()) return true;
    selector.refresh(state.graph, state.take_dirty());
    const Vertex v = selector.pop_best(state.graph);
    state.graph.remove_vertex(v);
    state.stack.push_back({v, Cause::kChosen});
  }
}

bool remainder_is_acyclic(const Instance& inst,
                          std::span<const Vertex> solution) {
  const std::size_t n = inst.vertex_count();
  std::vector<char> removed(n, 0);
  for (Vertex v : solution) removed[v] = 1;
  std::vector<std::size_t> indeg(n, 0);
  std::size_t remaining = 0;
  for (std::size_t u = 0; u < n; ++u) {
    if (removed[u]) continue;
    ++remaining;
    for (Vertex v : inst.successors(static_cast<Vertex>(u)))
      if (!removed[v]) ++indeg[v];
  }
  std::vector<Vertex> ready;
  for (std::size_t u = 0; u < n; ++u)
    if (!removed[u] && indeg[u] == 0) ready.push_back(static_cast<Vertex>(u));
  std::size_t seen = 0;
  while (!ready.empty()) {
    const Vertex u = ready.back();
    ready.pop_back();
    ++seen;
    for (Vertex v : inst.successors(u))
      if (!removed[v] && --indeg[v] == 0) ready.push_back(v);
  }
  return seen == remaining;
}

BestSolution prune_in_order(const Instance& inst,
                            std::span<const Vertex> solution,
                            std::span<const Vertex> order,
                            const StopCondition& stop) {
  const std::size_t n = inst.vertex_count();
  std::vector<char> in_solution(n, 0);
  for (Vertex v : solution) {
    if (v < 0 || static_cast<std::size_t>(v) >= n)
      throw std::out_of_range("prune: vertex outside the instance");
    in_solution[v] = 1;
  }
  std::vector<char> keep(n);
  for (std::size_t v = 0; v < n; ++v) keep[v] = !in_solution[v];
  std::optional<IncrementalDag> remainder;
  try {
    remainder.emplace(inst, keep);
  } catch (const std::logic_error&) {
    throw std::logic_error("prune: instance minus solution is not acyclic");
  }

  unsigned polls = 0;
  for (Vertex v : order) {
    if ((++polls & 15u) == 0 && stop.stop_requested()) break;
    if (!in_solution[v]) continue;
    if (remainder->try_insert(v)) in_solution[v] = 0;
  }

  BestSolution out;
  for (std::size_t v = 0; v < n; ++v)
    if (in_solution[v]) out.vertices.push_back(static_cast<Vertex>(v));
  return out;
}

BestSolution prune_redundant(const Instance& inst,
                             std::span<const StackEntry> stack,
                             const StopCondition& stop) {
  std::vector<Vertex> solution;
  solution.reserve(stack.size());
  for (const StackEntry& e : stack) solution.push_back(e.vertex);
  std::vector<Vertex> order(solution.rbegin(), solution.rend());
  return prune_in_order(inst, solution, order, stop);
}

std::size_t restore_count(std::size_t best_size, double restore_fraction) {
  if (best_size == 0) return 0;
  const auto k = static_cast<std::size_t>(
      std::ceil(restore_fraction * static_cast<double>(best_size) - 1e-9));
  return std::clamp<std::size_t>(k, 1, best_size);
}

BestSolution local_search_iteration(const BestSolution& best,
                                    const Instance& inst,
                                    const SolverConfig& config,
                                    LocalSearchState& ls,
                                    const StopCondition& stop,
                                    IterationRecord* record) {
  IterationRecord rec;
  rec.best_size = best.size();
  const auto finish = [&](const BestSolution& result) {
    rec.best_size = result.size();
    if (record != nullptr) *record = rec;
    return result;
  };
  if (best.vertices.empty()) {
    rec.completed = true;
    return finish(best);
  }

  // Partial Fisher-Yates: the first k entries become the freed set.
  std::vector<Vertex> pool = best.vertices;
  const std::size_t k = restore_count(pool.size(), config.restore_fraction);
  for (std::size_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
    std::swap(pool[i], pool[pick(ls.rng)]);
  }
  rec.freed = k;
  std::vector<Vertex> kept(pool.begin() + static_cast<std::ptrdiff_t>(k),
                           pool.end());
  std::sort(kept.begin(), kept.end());

  std::vector<char> keep(inst.vertex_count(), 1);
  for (Vertex v : kept) keep[v] = 0;
  SolverState state(induced_subgraph(inst, keep), config.trigger_fraction,
                    config.degree_bound);
  const Criterion criterion = criterion_for(config.scoring_mode, ls.iteration);
  ++ls.iteration;
  if (!construct_solution(state, criterion, stop)) return finish(best);

  const std::vector<Vertex> fresh = stack_vertices(state);
  std::vector<Vertex> candidate = kept;
  candidate.insert(candidate.end(), fresh.begin(), fresh.end());
  std::sort(candidate.begin(), candidate.end());

  BestSolution result{candidate};
  const auto remaining = stop.remaining();
  const bool skip_prune = remaining && ls.last_prune_cost &&
                          *remaining < 2 * *ls.last_prune_cost;
  if (!skip_prune) {
    std::vector<Vertex> order(fresh.rbegin(), fresh.rend());
    order.insert(order.end(), kept.begin(), kept.end());
    const auto t0 = Clock::now();
    result = prune_in_order(inst, candidate, order, stop);
    ls.last_prune_cost = Clock::now() - t0;
    rec.pruned = true;
  }
  require_valid(inst, result.vertices, "local search");

  rec.candidate_size = result.size();
  rec.completed = true;
  if (result.size() <= best.size()) {
    rec.accepted = true;
    return finish(result);
  }
  return finish(best);
}

SolveResult solve(const Instance& inst, const SolverConfig& config,
                  const std::atomic<bool>* cancel) {
  config.validate();
  std::optional<Clock::time_point> deadline;
  if (config.time_limit && !config.iteration_limit)
    deadline = Clock::now() +
               std::chrono::duration_cast<Clock::duration>(*config.time_limit);
  const StopCondition stop(cancel, deadline);

  SolveResult r;
  SolverState state(to_tri_graph(inst), config.trigger_fraction,
                    config.degree_bound);
  const Criterion first = config.scoring_mode == ScoringMode::kLexicographic
                              ? Criterion::kLexicographic
                              : Criterion::kProduct;
  r.stage_one_complete = construct_solution(state, first, stop);
  r.stage_one_passes = state.scheduler.passes;

  std::vector<Vertex> solution = stack_vertices(state);
  if (!r.stage_one_complete) {
    const std::vector<Vertex> live = state.graph.live_vertices();
    solution.insert(solution.end(), live.begin(), live.end());
  }
  r.stage_one_size = solution.size();
  require_valid(inst, solution, "stage one");

  std::vector<Vertex> order;
  for (auto it = state.stack.rbegin(); it != state.stack.rend(); ++it)
    order.push_back(it->vertex);
  r.best = prune_in_order(inst, solution, order, stop);
  require_valid(inst, r.best.vertices, "stage two");
  r.stage_two = r.best;
  r.stage_two_size = r.best.size();

  LocalSearchState ls(config.seed);
  while (!r.best.vertices.empty()) {
    if (config.iteration_limit && r.iterations >= *config.iteration_limit)
      break;
    if (stop.stop_requested()) break;
    IterationRecord rec;
    r.best = local_search_iteration(r.best, inst, config, ls, stop, &rec);
    if (!rec.completed) break;
    ++r.iterations;
    r.history.push_back(rec);
  }
  r.interrupted = stop.cancelled();
  return r;
}

}  // namespace dfvs
