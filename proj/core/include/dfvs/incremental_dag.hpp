#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <span>
#include <vector>

#include "dfvs/instance.hpp"

namespace dfvs {

/**
 * The subgraph of an instance induced by a growing set of live vertices,
 * kept acyclic together with a topological labelling. try_insert adds a
 * vertex unless that would close a cycle; the search only touches vertices
 * whose labels lie between the new vertex's neighbors.
 */
class IncrementalDag {
 public:
  /// Throws std::logic_error if the live part of inst is cyclic.
  IncrementalDag(const Instance& inst, std::span<const char> live);

  bool is_live(Vertex v) const { return live_[v] != 0; }

  /// Inserts v with all its edges to live vertices and returns true, or
  /// returns false and changes nothing if that would create a cycle.
  bool try_insert(Vertex v);

  /// Empty when every live edge goes from a smaller to a larger label.
  std::string audit() const;

 private:
  static constexpr std::int64_t kGap = std::int64_t{1} << 32;

  std::int64_t free_label_above(std::int64_t a);
  std::int64_t free_label_below(std::int64_t b);
  void relabel();

  const Instance* inst_;
  std::vector<char> live_;
  std::vector<std::int64_t> label_;
  std::set<std::int64_t> used_;
  std::vector<std::uint32_t> mark_;
  std::uint32_t epoch_ = 0;
  std::vector<Vertex> forward_, backward_, stack_;
};

}  // namespace dfvs
