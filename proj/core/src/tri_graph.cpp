#include "dfvs/tri_graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dfvs {

TriGraph::TriGraph(std::size_t n) : nodes_(n), live_(n, 1), live_count_(n) {}

std::vector<Vertex> TriGraph::live_vertices() const {
  std::vector<Vertex> out;
  out.reserve(live_count_);
  for (std::size_t i = 0; i < live_.size(); ++i)
    if (live_[i]) out.push_back(static_cast<Vertex>(i));
  return out;
}

void TriGraph::require_live(Vertex v, const char* op) const {
  if (!is_live(v)) {
    throw std::logic_error(std::string(op) + ": vertex " + std::to_string(v) +
                           " is not live");
  }
}

bool TriGraph::has_edge(Vertex u, Vertex v) const {
  if (!is_live(u) || !is_live(v)) return false;
  if (u == v) return nodes_[u].self_loop;
  return nodes_[u].out_only.contains(v) || nodes_[u].bidir.contains(v);
}

bool TriGraph::add_edge(Vertex u, Vertex v) {
  require_live(u, "add_edge");
  require_live(v, "add_edge");
  if (u == v) {
    if (nodes_[u].self_loop) return false;
    nodes_[u].self_loop = true;
    ++edge_count_;
    touch(u);
    return true;
  }
  Node& nu = nodes_[u];
  Node& nv = nodes_[v];
  if (nu.out_only.contains(v) || nu.bidir.contains(v)) return false;
  if (nu.in_only.erase(v)) {
    // (v, u) already present: the pair becomes bidirectional.
    nv.out_only.erase(u);
    nu.bidir.insert(v);
    nv.bidir.insert(u);
  } else {
    nu.out_only.insert(v);
    nv.in_only.insert(u);
  }
  ++edge_count_;
  touch(u);
  touch(v);
  return true;
}

bool TriGraph::erase_edge(Vertex u, Vertex v) {
  if (!is_live(u) || !is_live(v)) return false;
  if (u == v) {
    if (!nodes_[u].self_loop) return false;
    nodes_[u].self_loop = false;
    --edge_count_;
    touch(u);
    return true;
  }
  Node& nu = nodes_[u];
  Node& nv = nodes_[v];
  if (nu.out_only.erase(v)) {
    nv.in_only.erase(u);
  } else if (nu.bidir.erase(v)) {
    nv.bidir.erase(u);
    nu.in_only.insert(v);
    nv.out_only.insert(u);
  } else {
    return false;
  }
  --edge_count_;
  touch(u);
  touch(v);
  return true;
}

void TriGraph::remove_vertex(Vertex v) {
  require_live(v, "remove_vertex");
  Node& n = nodes_[v];
  for (Vertex u : n.in_only) {
    nodes_[u].out_only.erase(v);
    touch(u);
  }
  for (Vertex u : n.out_only) {
    nodes_[u].in_only.erase(v);
    touch(u);
  }
  for (Vertex u : n.bidir) {
    nodes_[u].bidir.erase(v);
    touch(u);
  }
  edge_count_ -= n.in_only.size() + n.out_only.size() + 2 * n.bidir.size() +
                 (n.self_loop ? 1 : 0);
  n = Node{};
  live_[v] = 0;
  --live_count_;
}

std::vector<Vertex> TriGraph::merge_vertex(Vertex v) {
  require_live(v, "merge_vertex");
  if (nodes_[v].self_loop)
    throw std::logic_error("merge_vertex: vertex " + std::to_string(v) +
                           " has a self-loop");
  std::vector<Vertex> preds(nodes_[v].in_only.begin(), nodes_[v].in_only.end());
  std::vector<Vertex> succs(nodes_[v].out_only.begin(),
                            nodes_[v].out_only.end());
  const NeighborSet& both = nodes_[v].bidir;
  preds.insert(preds.end(), both.begin(), both.end());
  succs.insert(succs.end(), both.begin(), both.end());
  remove_vertex(v);

  std::vector<Vertex> new_loops;
  for (Vertex p : preds) {
    for (Vertex s : succs) {
      if (p == s) {
        if (add_edge(p, p)) new_loops.push_back(p);
      } else {
        add_edge(p, s);
      }
    }
  }
  std::sort(new_loops.begin(), new_loops.end());
  return new_loops;
}

void TriGraph::insert_vertex(Vertex v) {
  if (v < 0 || static_cast<std::size_t>(v) >= live_.size())
    throw std::logic_error("insert_vertex: index out of range");
  if (live_[v])
    throw std::logic_error("insert_vertex: vertex " + std::to_string(v) +
                           " is already live");
  live_[v] = 1;
  ++live_count_;
  touch(v);
}

std::vector<Vertex> TriGraph::take_touched() {
  std::vector<Vertex> out;
  out.swap(touched_);
  return out;
}

std::string TriGraph::audit() const {
  std::ostringstream err;
  std::size_t edges = 0;
  std::size_t live = 0;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const Vertex v = static_cast<Vertex>(i);
    const Node& n = nodes_[i];
    if (!live_[i]) {
      if (!n.in_only.empty() || !n.out_only.empty() || !n.bidir.empty() ||
          n.self_loop) {
        err << "dead vertex " << v << " keeps adjacency";
        return err.str();
      }
      continue;
    }
    ++live;
    edges += n.out_only.size() + n.bidir.size() + (n.self_loop ? 1 : 0);
    const auto check_set = [&](const NeighborSet& s, const char* name) {
      for (Vertex u : s) {
        if (u == v || !is_live(u)) {
          err << name << "(" << v << ") holds invalid vertex " << u;
          return false;
        }
      }
      return true;
    };
    if (!check_set(n.in_only, "in_only") || !check_set(n.out_only, "out_only") ||
        !check_set(n.bidir, "bidir"))
      return err.str();
    for (Vertex u : n.in_only) {
      if (n.out_only.contains(u) || n.bidir.contains(u)) {
        err << "neighbor sets of " << v << " overlap at " << u;
        return err.str();
      }
      if (!nodes_[u].out_only.contains(v)) {
        err << "asymmetric in_only(" << v << ") at " << u;
        return err.str();
      }
    }
    for (Vertex u : n.out_only) {
      if (n.bidir.contains(u)) {
        err << "neighbor sets of " << v << " overlap at " << u;
        return err.str();
      }
      if (!nodes_[u].in_only.contains(v)) {
        err << "asymmetric out_only(" << v << ") at " << u;
        return err.str();
      }
    }
    for (Vertex u : n.bidir) {
      if (!nodes_[u].bidir.contains(v)) {
        err << "asymmetric bidir(" << v << ") at " << u;
        return err.str();
      }
    }
  }
  if (live != live_count_) {
    err << "live count " << live_count_ << " but " << live << " live flags";
    return err.str();
  }
  if (edges != edge_count_) {
    err << "edge count " << edge_count_ << " but " << edges << " edges stored";
    return err.str();
  }
  return {};
}

std::vector<int> strongly_connected_components(const TriGraph& g,
                                               SccEdges edges) {
  const std::size_t n = g.capacity();
  std::vector<int> comp(n, -1);
  std::vector<int> index(n, -1);
  std::vector<int> low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<Vertex> stack;

  struct Frame {
    Vertex v;
    int phase;  // 0: out_only, 1: bidir
    NeighborSet::const_iterator it;
  };
  std::vector<Frame> call;
  int next_index = 0;
  int next_comp = 0;
  const bool follow_bidir = edges == SccEdges::kAll;

  const auto enter = [&](Vertex v) {
    index[v] = low[v] = next_index++;
    stack.push_back(v);
    on_stack[v] = 1;
    call.push_back({v, 0, g.out_only(v).begin()});
  };

  for (std::size_t root = 0; root < n; ++root) {
    if (!g.is_live(static_cast<Vertex>(root)) || index[root] != -1) continue;
    enter(static_cast<Vertex>(root));
    while (!call.empty()) {
      Frame& f = call.back();
      const Vertex v = f.v;
      bool descended = false;
      while (true) {
        const NeighborSet& set = f.phase == 0 ? g.out_only(v) : g.bidir(v);
        if (f.it == set.end()) {
          if (f.phase == 0 && follow_bidir) {
            f.phase = 1;
            f.it = g.bidir(v).begin();
            continue;
          }
          break;
        }
        const Vertex w = *f.it++;
        if (index[w] == -1) {
          enter(w);
          descended = true;
          break;
        }
        if (on_stack[w]) low[v] = std::min(low[v], index[w]);
      }
      if (descended) continue;
      if (low[v] == index[v]) {
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = next_comp;
        } while (w != v);
        ++next_comp;
      }
      call.pop_back();
      if (!call.empty()) {
        const Vertex parent = call.back().v;
        low[parent] = std::min(low[parent], low[v]);
      }
    }
  }
  return comp;
}

bool is_acyclic(const TriGraph& g) {
  for (Vertex v : g.live_vertices())
    if (g.self_loop(v) || !g.bidir(v).empty()) return false;
  const std::vector<int> comp = strongly_connected_components(g);
  std::vector<char> used(g.capacity(), 0);
  for (std::size_t v = 0; v < comp.size(); ++v) {
    if (comp[v] < 0) continue;
    if (used[comp[v]]) return false;
    used[comp[v]] = 1;
  }
  return true;
}

bool CycleProbe::creates_cycle(const TriGraph& g, Vertex v,
                               std::span<const Vertex> successors,
                               std::span<const Vertex> predecessors) {
  if (g.is_live(v))
    throw std::logic_error("creates_cycle_if_restored: vertex " +
                           std::to_string(v) + " is live");
  const std::size_t n = g.capacity();
  if (target_.size() < n) {
    target_.resize(n, 0);
    seen_.resize(n, 0);
  }
  if (++epoch_ == 0) {
    std::fill(target_.begin(), target_.end(), 0);
    std::fill(seen_.begin(), seen_.end(), 0);
    epoch_ = 1;
  }
  bool any_target = false;
  for (Vertex p : predecessors) {
    if (p == v) return true;
    if (g.is_live(p)) {
      target_[p] = epoch_;
      any_target = true;
    }
  }
  if (!any_target) return false;

  frontier_.clear();
  for (Vertex s : successors) {
    if (s == v) return true;
    if (!g.is_live(s) || seen_[s] == epoch_) continue;
    if (target_[s] == epoch_) return true;
    seen_[s] = epoch_;
    frontier_.push_back(s);
  }
  while (!frontier_.empty()) {
    const Vertex u = frontier_.back();
    frontier_.pop_back();
    // g is acyclic, so bidir sets are empty and out_only covers every edge.
    for (Vertex w : g.out_only(u)) {
      if (seen_[w] == epoch_) continue;
      if (target_[w] == epoch_) return true;
      seen_[w] = epoch_;
      frontier_.push_back(w);
    }
  }
  return false;
}

bool creates_cycle_if_restored(const TriGraph& g, Vertex v,
                               std::span<const Vertex> successors,
                               std::span<const Vertex> predecessors) {
  CycleProbe probe;
  return probe.creates_cycle(g, v, successors, predecessors);
}

}  // namespace dfvs
