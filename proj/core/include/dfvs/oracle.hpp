#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dfvs/instance.hpp"
#include "dfvs/tri_graph.hpp"

namespace dfvs {

/// Largest graph the exhaustive oracle accepts.
inline constexpr std::size_t kOracleMaxVertices = 20;

/// Minimum feedback vertex set by exhaustive search over subsets of
/// increasing size. Throws std::invalid_argument above kOracleMaxVertices
/// live vertices. Result is sorted.
std::vector<Vertex> exact_min_dfvs(const TriGraph& g);
std::vector<Vertex> exact_min_dfvs(const Instance& inst);

/// inst minus s is acyclic, checked through induced_subgraph + is_acyclic.
bool is_valid_dfvs(const Instance& inst, std::span<const Vertex> s);

/// Independent cycle test: iterative three-colour DFS over the instance's
/// adjacency lists, skipping vertices flagged in `removed` (may be empty).
bool has_cycle_dfs(const Instance& inst, std::span<const char> removed = {});

struct GeneratorParams {
  std::size_t n = 0;
  double p = 0.0;
  bool self_loops = false;
  std::uint64_t seed = 0;
};

/// Each ordered pair gets an edge with probability p (self-loops only when
/// enabled). Deterministic in the seed.
Instance random_digraph(const GeneratorParams& params);

/// m distinct non-loop edges drawn uniformly; for instances too large for
/// the quadratic pair scan.
Instance random_sparse_digraph(std::size_t n, std::size_t m,
                               std::uint64_t seed);

}  // namespace dfvs
