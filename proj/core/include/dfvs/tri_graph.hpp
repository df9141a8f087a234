#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

namespace dfvs {

/// Dense internal vertex index. External (file) ids are index + 1.
using Vertex = std::int32_t;

using NeighborSet = std::unordered_set<Vertex>;

/**
 * Mutable digraph keeping, for each live vertex, its neighborhood split into
 * three disjoint sets: predecessors only, successors only and vertices
 * connected in both directions. Self-loops are a per-vertex flag and never
 * appear in the neighbor sets.
 *
 * Every mutation can optionally be recorded in a "touched" log listing the
 * vertices whose neighborhood changed, which the reduction scheduler drains.
 */
class TriGraph {
 public:
  TriGraph() = default;
  /// Graph with vertices 0..n-1, all live, no edges.
  explicit TriGraph(std::size_t n);

  std::size_t capacity() const { return live_.size(); }
  std::size_t live_count() const { return live_count_; }
  std::size_t edge_count() const { return edge_count_; }
  bool empty() const { return live_count_ == 0; }

  bool is_live(Vertex v) const {
    return v >= 0 && static_cast<std::size_t>(v) < live_.size() && live_[v];
  }
  /// Live vertices in ascending order.
  std::vector<Vertex> live_vertices() const;

  const NeighborSet& in_only(Vertex v) const { return nodes_[v].in_only; }
  const NeighborSet& out_only(Vertex v) const { return nodes_[v].out_only; }
  const NeighborSet& bidir(Vertex v) const { return nodes_[v].bidir; }
  bool self_loop(Vertex v) const { return nodes_[v].self_loop; }

  std::size_t in_degree(Vertex v) const { return nodes_[v].in_only.size(); }
  std::size_t out_degree(Vertex v) const { return nodes_[v].out_only.size(); }
  std::size_t bidir_degree(Vertex v) const { return nodes_[v].bidir.size(); }
  std::size_t total_degree(Vertex v) const {
    return in_degree(v) + out_degree(v) + bidir_degree(v);
  }

  /// True iff the directed edge (u, v) exists.
  bool has_edge(Vertex u, Vertex v) const;

  /// Adds (u, v) if absent; u == v sets the self-loop flag. Returns true if
  /// the edge was new.
  bool add_edge(Vertex u, Vertex v);

  /// Erases the directed edge (u, v) if present, leaving (v, u) intact.
  bool erase_edge(Vertex u, Vertex v);

  /// G - v. Throws std::logic_error if v is not live.
  void remove_vertex(Vertex v);

  /// G o v: connects every predecessor of v to every successor of v, then
  /// drops v. Returns the vertices that gained a self-loop, ascending.
  /// Throws std::logic_error if v is not live or carries a self-loop.
  std::vector<Vertex> merge_vertex(Vertex v);

  /// Makes a dead vertex live again with no incident edges.
  void insert_vertex(Vertex v);

  void set_change_tracking(bool on) { tracking_ = on; }
  /// Returns and clears the touched log (may contain duplicates).
  std::vector<Vertex> take_touched();

  /// Full-scan audit of the neighbor-set invariants. Returns an empty string
  /// when everything holds, otherwise a description of the first violation.
  std::string audit() const;

 private:
  struct Node {
    NeighborSet in_only;
    NeighborSet out_only;
    NeighborSet bidir;
    bool self_loop = false;
  };

  void touch(Vertex v) {
    if (tracking_) touched_.push_back(v);
  }
  void require_live(Vertex v, const char* op) const;

  std::vector<Node> nodes_;
  std::vector<char> live_;
  std::size_t live_count_ = 0;
  std::size_t edge_count_ = 0;
  bool tracking_ = false;
  std::vector<Vertex> touched_;
};

/// Which edges an SCC computation follows.
enum class SccEdges {
  kAll,                // out_only and bidir successors
  kOneDirectionalOnly  // out_only successors; bidirectional pairs ignored
};

/// Component id per vertex index (-1 for dead vertices), iterative Tarjan.
/// Two live vertices share an id iff each reaches the other.
std::vector<int> strongly_connected_components(const TriGraph& g,
                                               SccEdges edges = SccEdges::kAll);

/// No self-loop, no bidirectional pair and only singleton SCCs.
bool is_acyclic(const TriGraph& g);

/**
 * Answers "would restoring v with these original edges close a cycle?" on an
 * acyclic graph with a single reachability search from v's live successors
 * towards its live predecessors. Scratch buffers are reused across queries.
 */
class CycleProbe {
 public:
  bool creates_cycle(const TriGraph& g, Vertex v,
                     std::span<const Vertex> successors,
                     std::span<const Vertex> predecessors);

 private:
  std::vector<std::uint32_t> target_;
  std::vector<std::uint32_t> seen_;
  std::vector<Vertex> frontier_;
  std::uint32_t epoch_ = 0;
};

bool creates_cycle_if_restored(const TriGraph& g, Vertex v,
                               std::span<const Vertex> successors,
                               std::span<const Vertex> predecessors);

}  // namespace dfvs
