#pragma once

#include <algorithm>
#include <initializer_list>
#include <set>
#include <utility>
#include <vector>

#include "dfvs/instance.hpp"
#include "dfvs/oracle.hpp"
#include "dfvs/tri_graph.hpp"

namespace dfvs::testing {

using Edge = std::pair<Vertex, Vertex>;
using EdgeSet = std::set<Edge>;

// Graph over ids 1..n (index 0 exists but is dead), matching the 1-based
// notation used in the test cases.
inline TriGraph graph_1based(Vertex n, std::initializer_list<Edge> edges) {
  TriGraph g(static_cast<std::size_t>(n) + 1);
  g.remove_vertex(0);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

// Same vertex numbering as graph_1based: index k is id k, index 0 isolated.
inline Instance instance_1based(Vertex n, std::initializer_list<Edge> edges) {
  std::vector<Edge> list(edges);
  return Instance(static_cast<std::size_t>(n) + 1, list);
}

inline EdgeSet edge_set(const TriGraph& g) {
  EdgeSet out;
  for (Vertex v : g.live_vertices()) {
    if (g.self_loop(v)) out.emplace(v, v);
    for (Vertex w : g.out_only(v)) out.emplace(v, w);
    for (Vertex w : g.bidir(v)) out.emplace(v, w);
  }
  return out;
}

inline std::set<Vertex> as_set(const NeighborSet& s) { return {s.begin(), s.end()}; }

template <typename Range>
std::set<Vertex> as_set(const Range& r) {
  return {r.begin(), r.end()};
}

inline std::size_t optimum(const TriGraph& g) { return exact_min_dfvs(g).size(); }

// Random TriGraph over indices 0..n-1 built from the oracle generator.
inline TriGraph random_tri_graph(std::size_t n, double p, std::uint64_t seed,
                                 bool self_loops = false) {
  return to_tri_graph(random_digraph({n, p, self_loops, seed}));
}

// reach[u][v]: v reachable from u by a path of length >= 1. Floyd-Warshall
// style closure over a plain edge set.
inline std::vector<std::vector<char>> reachability(const TriGraph& g) {
  const std::size_t n = g.capacity();
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (const auto& [u, v] : edge_set(g)) reach[u][v] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (reach[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (reach[k][j]) reach[i][j] = 1;
  return reach;
}

}  // namespace dfvs::testing
