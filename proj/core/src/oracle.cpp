#include "dfvs/oracle.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace dfvs {

namespace {

// Peels vertices without predecessors inside `alive`; acyclic iff all peel.
bool bitmask_acyclic(std::span<const std::uint32_t> preds, std::uint32_t alive) {
  bool progress = true;
  while (alive != 0 && progress) {
    progress = false;
    for (std::uint32_t rest = alive; rest != 0; rest &= rest - 1) {
      const int i = std::countr_zero(rest);
      if ((preds[i] & alive) == 0) {
        alive &= ~(1u << i);
        progress = true;
      }
    }
  }
  return alive == 0;
}

}  // namespace

std::vector<Vertex> exact_min_dfvs(const TriGraph& g) {
  const std::vector<Vertex> live = g.live_vertices();
  const std::size_t k = live.size();
  if (k > kOracleMaxVertices)
    throw std::invalid_argument("exact_min_dfvs: " + std::to_string(k) +
                                " vertices exceed the oracle limit of " +
                                std::to_string(kOracleMaxVertices));

  std::vector<int> pos(g.capacity(), -1);
  for (std::size_t i = 0; i < k; ++i) pos[live[i]] = static_cast<int>(i);
  std::vector<std::uint32_t> preds(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    const Vertex v = live[i];
    if (g.self_loop(v)) preds[i] |= 1u << i;
    for (Vertex u : g.in_only(v)) preds[i] |= 1u << pos[u];
    for (Vertex u : g.bidir(v)) preds[i] |= 1u << pos[u];
  }

  const std::uint32_t full =
      k == 0 ? 0u : static_cast<std::uint32_t>((1ull << k) - 1);
  for (std::size_t size = 0; size <= k; ++size) {
    // Gosper's hack over all k-bit masks with `size` bits set.
    std::uint32_t mask =
        size == 0 ? 0u : static_cast<std::uint32_t>((1ull << size) - 1);
    while (true) {
      if (bitmask_acyclic(preds, full & ~mask)) {
        std::vector<Vertex> out;
        for (std::size_t i = 0; i < k; ++i)
          if (mask >> i & 1u) out.push_back(live[i]);
        // Cross-check the hit with the graph-core primitive.
        TriGraph rest = g;
        for (Vertex v : out) rest.remove_vertex(v);
        if (!is_acyclic(rest))
          throw std::logic_error("exact_min_dfvs: acyclicity checks disagree");
        return out;
      }
      if (mask == 0) break;
      const std::uint32_t low = mask & (~mask + 1);
      const std::uint64_t ripple = static_cast<std::uint64_t>(mask) + low;
      if (ripple > full) break;
      const auto r = static_cast<std::uint32_t>(ripple);
      mask = (((r ^ mask) >> 2) / low) | r;
      if (mask > full) break;
    }
  }
  return live;  // unreachable: removing every vertex is always acyclic
}

std::vector<Vertex> exact_min_dfvs(const Instance& inst) {
  return exact_min_dfvs(to_tri_graph(inst));
}

bool is_valid_dfvs(const Instance& inst, std::span<const Vertex> s) {
  std::vector<char> keep(inst.vertex_count(), 1);
  for (Vertex v : s) keep.at(static_cast<std::size_t>(v)) = 0;
  return is_acyclic(induced_subgraph(inst, keep));
}

bool has_cycle_dfs(const Instance& inst, std::span<const char> removed) {
  const std::size_t n = inst.vertex_count();
  const auto gone = [&](Vertex v) {
    return !removed.empty() && removed[static_cast<std::size_t>(v)];
  };
  enum : char { kWhite, kGrey, kBlack };
  std::vector<char> colour(n, kWhite);
  std::vector<std::pair<Vertex, std::size_t>> stack;
  for (std::size_t root = 0; root < n; ++root) {
    const auto r = static_cast<Vertex>(root);
    if (gone(r) || colour[root] != kWhite) continue;
    colour[root] = kGrey;
    stack.emplace_back(r, 0);
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      const auto succ = inst.successors(v);
      if (next == succ.size()) {
        colour[v] = kBlack;
        stack.pop_back();
        continue;
      }
      const Vertex w = succ[next++];
      if (gone(w)) continue;
      if (colour[w] == kGrey) return true;
      if (colour[w] == kWhite) {
        colour[w] = kGrey;
        stack.emplace_back(w, 0);
      }
    }
  }
  return false;
}

Instance random_digraph(const GeneratorParams& params) {
  if (params.p < 0.0 || params.p > 1.0)
    throw std::invalid_argument("random_digraph: p must lie in [0, 1]");
  std::mt19937_64 rng(params.seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t u = 0; u < params.n; ++u)
    for (std::size_t v = 0; v < params.n; ++v) {
      if (u == v && !params.self_loops) continue;
      if (coin(rng) < params.p)
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
  return Instance(params.n, edges);
}

Instance random_sparse_digraph(std::size_t n, std::size_t m,
                               std::uint64_t seed) {
  if (n < 2 && m > 0)
    throw std::invalid_argument("random_sparse_digraph: need two vertices");
  const double pairs = static_cast<double>(n) * static_cast<double>(n - 1);
  if (static_cast<double>(m) > pairs / 2)
    throw std::invalid_argument("random_sparse_digraph: too dense");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, n - 1);
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(m * 2);
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(m);
  while (edges.size() < m) {
    const std::uint64_t u = pick(rng);
    const std::uint64_t v = pick(rng);
    if (u == v || !seen.insert(u * n + v).second) continue;
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Instance(n, edges);
}

}  // namespace dfvs
