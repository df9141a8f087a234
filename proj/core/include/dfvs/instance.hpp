#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "dfvs/tri_graph.hpp"

namespace dfvs {

/// Immutable input graph. Vertex i (0-based) is external id i + 1.
/// Adjacency lists are sorted and free of duplicates.
class Instance {
 public:
  Instance() = default;
  /// Builds from (tail, head) pairs over 0-based ids; duplicates collapse.
  Instance(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges,
           std::size_t declared_edges);
  Instance(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges)
      : Instance(n, edges, edges.size()) {}

  std::size_t vertex_count() const { return out_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  /// Edge count announced by the file header, which may differ.
  std::size_t declared_edge_count() const { return declared_edges_; }

  std::span<const Vertex> successors(Vertex v) const { return out_[v]; }
  std::span<const Vertex> predecessors(Vertex v) const { return in_[v]; }

  std::vector<std::pair<Vertex, Vertex>> edges() const;

 private:
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::size_t edge_count_ = 0;
  std::size_t declared_edges_ = 0;
};

/// Vertices flagged in keep (indexed by vertex) with every original edge
/// between them.
TriGraph induced_subgraph(const Instance& inst, std::span<const char> keep);

/// Whole instance as a TriGraph.
TriGraph to_tri_graph(const Instance& inst);

}  // namespace dfvs
