#include "dfvs/instance.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dfvs {

Instance::Instance(std::size_t n,
                   std::span<const std::pair<Vertex, Vertex>> edges,
                   std::size_t declared_edges)
    : out_(n), in_(n), declared_edges_(declared_edges) {
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n ||
        static_cast<std::size_t>(v) >= n)
      throw std::out_of_range("Instance: edge (" + std::to_string(u) + ", " +
                              std::to_string(v) + ") outside vertex range");
    out_[u].push_back(v);
  }
  for (std::size_t u = 0; u < n; ++u) {
    auto& list = out_[u];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    edge_count_ += list.size();
    for (Vertex v : list) in_[v].push_back(static_cast<Vertex>(u));
  }
}

std::vector<std::pair<Vertex, Vertex>> Instance::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < out_.size(); ++u)
    for (Vertex v : out_[u]) out.emplace_back(static_cast<Vertex>(u), v);
  return out;
}

TriGraph induced_subgraph(const Instance& inst, std::span<const char> keep) {
  const std::size_t n = inst.vertex_count();
  if (keep.size() != n)
    throw std::invalid_argument("induced_subgraph: mask size mismatch");
  TriGraph g(n);
  for (std::size_t v = 0; v < n; ++v)
    if (!keep[v]) g.remove_vertex(static_cast<Vertex>(v));
  for (std::size_t u = 0; u < n; ++u) {
    if (!keep[u]) continue;
    for (Vertex v : inst.successors(static_cast<Vertex>(u)))
      if (keep[v]) g.add_edge(static_cast<Vertex>(u), v);
  }
  return g;
}

TriGraph to_tri_graph(const Instance& inst) {
  std::vector<char> all(inst.vertex_count(), 1);
  return induced_subgraph(inst, all);
}

}  // namespace dfvs
