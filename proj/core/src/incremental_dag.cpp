#include "dfvs/incremental_dag.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dfvs {

IncrementalDag::IncrementalDag(const Instance& inst,
                               std::span<const char> live)
    : inst_(&inst),
      live_(live.begin(), live.end()),
      label_(inst.vertex_count(), 0),
      mark_(inst.vertex_count(), 0) {
  const std::size_t n = inst.vertex_count();
  if (live_.size() != n)
    throw std::invalid_argument("live mask size does not match instance");

  // Kahn's algorithm over the live part.
  std::vector<std::size_t> indegree(n, 0);
  std::vector<Vertex> queue;
  std::size_t live_count = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (!live_[v]) continue;
    ++live_count;
    for (Vertex w : inst.successors(static_cast<Vertex>(v)))
      if (live_[w]) ++indegree[w];
  }
  for (std::size_t v = 0; v < n; ++v)
    if (live_[v] && indegree[v] == 0) queue.push_back(static_cast<Vertex>(v));
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    label_[v] = static_cast<std::int64_t>(head) * kGap;
    used_.insert(label_[v]);
    for (Vertex w : inst.successors(v))
      if (live_[w] && --indegree[w] == 0) queue.push_back(w);
  }
  if (queue.size() != live_count)
    throw std::logic_error("live part of the instance is not acyclic");
}

void IncrementalDag::relabel() {
  std::vector<Vertex> order;
  for (std::size_t v = 0; v < live_.size(); ++v)
    if (live_[v]) order.push_back(static_cast<Vertex>(v));
  std::sort(order.begin(), order.end(),
            [&](Vertex a, Vertex b) { return label_[a] < label_[b]; });
  used_.clear();
  for (std::size_t i = 0; i < order.size(); ++i) {
    label_[order[i]] = static_cast<std::int64_t>(i) * kGap;
    used_.insert(label_[order[i]]);
  }
}

// Both helpers expect their argument to be a used label, and return a free
// label strictly between it and its neighbor. The caller must re-read labels
// afterwards because a relabel may have happened.
std::int64_t IncrementalDag::free_label_above(std::int64_t a) {
  auto it = used_.upper_bound(a);
  if (it == used_.end()) return a + kGap;
  if (*it - a >= 2) return a + (*it - a) / 2;
  return INT64_MIN;
}

std::int64_t IncrementalDag::free_label_below(std::int64_t b) {
  auto it = used_.lower_bound(b);
  if (it == used_.begin()) return b - kGap;
  --it;
  if (b - *it >= 2) return *it + (b - *it) / 2;
  return INT64_MIN;
}

bool IncrementalDag::try_insert(Vertex v) {
  if (live_[v]) throw std::logic_error("vertex is already in the DAG");
  const auto succs = inst_->successors(v);
  const auto preds = inst_->predecessors(v);

  Vertex low_succ = -1, high_pred = -1;
  for (Vertex s : succs) {
    if (s == v) return false;
    if (live_[s] && (low_succ < 0 || label_[s] < label_[low_succ]))
      low_succ = s;
  }
  for (Vertex p : preds)
    if (live_[p] && (high_pred < 0 || label_[p] > label_[high_pred]))
      high_pred = p;

  const auto fresh_label = [&](auto pick) {
    std::int64_t x = pick();
    if (x == INT64_MIN) {
      relabel();
      x = pick();
    }
    return x;
  };

  if (low_succ < 0 || high_pred < 0 ||
      label_[high_pred] < label_[low_succ]) {
    // Room between the neighbors already; no search needed.
    const std::int64_t x = fresh_label([&] {
      if (high_pred >= 0) return free_label_above(label_[high_pred]);
      if (low_succ >= 0) return free_label_below(label_[low_succ]);
      return used_.empty() ? 0 : *used_.rbegin() + kGap;
    });
    label_[v] = x;
    used_.insert(x);
    live_[v] = 1;
    return true;
  }

  const std::int64_t lb = label_[low_succ];
  const std::int64_t ub = label_[high_pred];
  if (++epoch_ == 0) {
    std::fill(mark_.begin(), mark_.end(), 0);
    epoch_ = 1;
  }
  const std::uint32_t pred_mark = epoch_;
  for (Vertex p : preds)
    if (live_[p]) mark_[p] = pred_mark;
  if (++epoch_ == 0) {
    std::fill(mark_.begin(), mark_.end(), 0);
    epoch_ = 1;
  }
  const std::uint32_t seen = epoch_;

  // Forward search from the successors within [lb, ub]; meeting a
  // predecessor means a cycle through v.
  forward_.clear();
  stack_.clear();
  for (Vertex s : succs) {
    if (!live_[s] || label_[s] > ub) continue;
    if (mark_[s] == pred_mark) return false;
    if (mark_[s] == seen) continue;
    mark_[s] = seen;
    stack_.push_back(s);
  }
  while (!stack_.empty()) {
    const Vertex x = stack_.back();
    stack_.pop_back();
    forward_.push_back(x);
    for (Vertex w : inst_->successors(x)) {
      if (!live_[w] || label_[w] > ub || mark_[w] == seen) continue;
      if (mark_[w] == pred_mark) return false;
      mark_[w] = seen;
      stack_.push_back(w);
    }
  }

  // Backward search from the predecessors within [lb, ub].
  backward_.clear();
  for (Vertex p : preds) {
    if (!live_[p] || label_[p] < lb || mark_[p] == seen) continue;
    mark_[p] = seen;
    stack_.push_back(p);
  }
  while (!stack_.empty()) {
    const Vertex x = stack_.back();
    stack_.pop_back();
    backward_.push_back(x);
    for (Vertex w : inst_->predecessors(x)) {
      if (!live_[w] || label_[w] < lb || mark_[w] == seen) continue;
      mark_[w] = seen;
      stack_.push_back(w);
    }
  }

  // A free label inside the window for v; lb < ub, both used.
  const std::int64_t x = fresh_label([&] { return free_label_above(label_[low_succ]); });
  const auto by_label = [&](Vertex a, Vertex b) { return label_[a] < label_[b]; };
  std::sort(forward_.begin(), forward_.end(), by_label);
  std::sort(backward_.begin(), backward_.end(), by_label);
  std::vector<std::int64_t> pool;
  pool.reserve(forward_.size() + backward_.size() + 1);
  for (Vertex b : backward_) pool.push_back(label_[b]);
  for (Vertex f : forward_) pool.push_back(label_[f]);
  pool.push_back(x);
  std::sort(pool.begin(), pool.end());

  std::size_t next = 0;
  for (Vertex b : backward_) label_[b] = pool[next++];
  label_[v] = pool[next++];
  for (Vertex f : forward_) label_[f] = pool[next++];
  used_.insert(x);
  live_[v] = 1;
  return true;
}

std::string IncrementalDag::audit() const {
  for (std::size_t v = 0; v < live_.size(); ++v) {
    if (!live_[v]) continue;
    for (Vertex w : inst_->successors(static_cast<Vertex>(v)))
      if (live_[w] && label_[w] <= label_[v])
        return "edge " + std::to_string(v) + "->" + std::to_string(w) +
               " violates the labelling";
  }
  return "";
}

}  // namespace dfvs
