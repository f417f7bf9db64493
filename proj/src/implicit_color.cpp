#include "dyncolor/implicit_color.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "dyncolor/degeneracy.hpp"

namespace dyncolor {

double recursion_probability(int count_after, int d, int threshold_mult) {
  if (d < 2) throw DomainError("d must be at least 2");
  if (threshold_mult < 1) throw DomainError("threshold_mult must be positive");
  const int limit = threshold_mult * d;
  if (count_after < 1 || count_after > limit)
    throw DomainError("count_after " + std::to_string(count_after) +
                      " outside [1, " + std::to_string(limit) + "]");
  return std::min(1.0 / (limit + 1 - count_after), 1.0);
}

ImplicitColorer::ImplicitColorer(std::size_t n, RecursionPolicy policy,
                                 int threshold_mult, int palette_mult)
    : stamp_(n, 0),
      color_(n, 0),
      processed_count_(n, 0),
      processed_in_(n),
      in_vstar_(n, 0),
      threshold_mult_(threshold_mult),
      palette_mult_(palette_mult),
      policy_(policy) {
  if (threshold_mult_ < 1 || palette_mult_ < 1)
    throw DomainError("multipliers must be positive");
}

void ImplicitColorer::check_node(NodeId v) const {
  if (v >= stamp_.size())
    throw DomainError("node " + std::to_string(v) + " out of range");
}

void ImplicitColorer::refresh(NodeId v) {
  if (stamp_[v] == generation_) return;
  stamp_[v] = generation_;
  color_[v] = 0;
  processed_count_[v] = 0;
  processed_in_[v].clear();
  in_vstar_[v] = 0;
  ++touched_;
}

void ImplicitColorer::begin_epoch_if_stale(const OrientedGraph& g) {
  if (epoch_open_ && state_epoch_ == g.epoch()) return;
  epoch_open_ = true;
  state_epoch_ = g.epoch();
  ++generation_;  // invalidates every stamp in O(1)
  d_ = g.d_cap();
  colored_count_ = 0;
}

bool ImplicitColorer::is_colored(NodeId v) const {
  check_node(v);
  return epoch_open_ && stamp_[v] == generation_ && color_[v] != 0;
}

int ImplicitColorer::color_of(NodeId v) const {
  check_node(v);
  if (!epoch_open_ || stamp_[v] != generation_) return 0;
  return color_[v];
}

int ImplicitColorer::processed_count(NodeId v) const {
  check_node(v);
  if (!epoch_open_ || stamp_[v] != generation_) return 0;
  return processed_count_[v];
}

std::vector<Arc> ImplicitColorer::processed_in(NodeId v) const {
  check_node(v);
  if (!epoch_open_ || stamp_[v] != generation_) return {};
  return processed_in_[v];
}

ImplicitColorer::VstarResult ImplicitColorer::gather_vstar(
    const OrientedGraph& g, NodeId u) {
  VstarResult res;
  refresh(u);
  in_vstar_[u] = 1;
  res.nodes.push_back(u);

  struct Frame {
    NodeId node;
    std::size_t idx;
  };
  std::vector<Frame> stack{{u, 0}};
  while (!stack.empty()) {
    Frame& f = stack.back();
    const auto heads = g.out_heads(f.node);
    if (f.idx == heads.size()) {
      stack.pop_back();
      continue;
    }
    const NodeId tail = f.node;
    const NodeId w = heads[f.idx++];
    // Arc (tail, w) is now processed. Only arcs into nodes outside
    // V^colored and V* are recorded and can start a recursion.
    refresh(w);
    if (color_[w] != 0 || in_vstar_[w]) continue;
    processed_in_[w].push_back({tail, w});
    const int count = ++processed_count_[w];
    if (policy_.should_recurse(count, d_, threshold_mult_)) {
      res.trigger_arcs.push_back({tail, w});
      in_vstar_[w] = 1;
      res.nodes.push_back(w);
      stack.push_back({w, 0});  // invalidates f; loop re-reads back()
    }
  }
  return res;
}

std::vector<NodeId> ImplicitColorer::compute_vstar(const OrientedGraph& g,
                                                   NodeId u) {
  check_node(u);
  begin_epoch_if_stale(g);
  if (is_colored(u)) throw DomainError("compute_vstar on a colored node");
  return gather_vstar(g, u).nodes;
}

void ImplicitColorer::color_vstar(const OrientedGraph& g,
                                  const std::vector<NodeId>& vstar) {
  if (vstar.empty()) return;
  begin_epoch_if_stale(g);
  for (NodeId v : vstar) {
    check_node(v);
    refresh(v);
    if (color_[v] != 0) throw DomainError("color_vstar on a colored node");
    in_vstar_[v] = 1;
  }

  // Induced edges of G[V*]: scan out-arcs of members, keep those that stay
  // inside. O(|V*| * d).
  std::unordered_map<NodeId, std::size_t> local;
  local.reserve(vstar.size() * 2);
  for (std::size_t i = 0; i < vstar.size(); ++i) local.emplace(vstar[i], i);
  std::vector<std::pair<NodeId, NodeId>> induced;
  std::vector<std::vector<NodeId>> adj(vstar.size());
  for (NodeId v : vstar) {
    for (NodeId w : g.out_heads(v)) {
      if (!in_vstar_[w] || stamp_[w] != generation_) continue;
      induced.emplace_back(v, w);
      adj[local[v]].push_back(w);
      adj[local[w]].push_back(v);
    }
  }

  const DegeneracyOrder ord = smallest_last(vstar, induced);

  const int palette = palette_mult_ * d_;
  std::vector<std::uint64_t> seen(palette + 1, 0);
  std::uint64_t pass = 0;

  // Reverse of the removal order: every node meets at most
  // degeneracy(G[V*]) already-colored V* neighbors.
  for (auto it = ord.order.rbegin(); it != ord.order.rend(); ++it) {
    const NodeId v = *it;
    ++pass;
    for (const Arc& a : processed_in_[v]) {
      const int c = color_of(a.tail);
      if (c > 0 && c <= palette) seen[c] = pass;
    }
    for (NodeId w : g.out_heads(v)) {
      const int c = color_of(w);
      if (c > 0 && c <= palette) seen[c] = pass;
    }
    for (NodeId w : adj[local[v]]) {
      const int c = color_of(w);
      if (c > 0 && c <= palette) seen[c] = pass;
    }
    int chosen = 0;
    for (int c = 1; c <= palette; ++c) {
      if (seen[c] != pass) {
        chosen = c;
        break;
      }
    }
    if (chosen == 0)
      throw PaletteExhausted("no free color in [1, " +
                             std::to_string(palette) + "] for node " +
                             std::to_string(v));
    color_[v] = chosen;
    in_vstar_[v] = 0;
    ++colored_count_;
  }
}

QueryReport ImplicitColorer::query_color(const OrientedGraph& g, NodeId u) {
  check_node(u);
  begin_epoch_if_stale(g);
  refresh(u);
  QueryReport report;
  report.node = u;
  report.epoch = g.epoch();
  if (color_[u] != 0) {
    report.color = color_[u];
    return report;
  }
  VstarResult vr = gather_vstar(g, u);
  color_vstar(g, vr.nodes);
  report.color = color_[u];
  report.vstar_size = static_cast<int>(vr.nodes.size());
  report.trigger_arcs = std::move(vr.trigger_arcs);
  return report;
}

void ImplicitColorer::force_color(const OrientedGraph& g, NodeId v,
                                  int color) {
  check_node(v);
  begin_epoch_if_stale(g);
  refresh(v);
  if (color_[v] != 0) throw DomainError("force_color on a colored node");
  if (color < 1) throw DomainError("color must be positive");
  color_[v] = color;
  ++colored_count_;
  for (NodeId w : g.out_heads(v)) {
    refresh(w);
    if (color_[w] != 0 || in_vstar_[w]) continue;
    processed_in_[w].push_back({v, w});
    ++processed_count_[w];
  }
}

}  // namespace dyncolor
