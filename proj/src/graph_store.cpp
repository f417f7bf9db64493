#include "dyncolor/graph_store.hpp"

#include <algorithm>

#include "dyncolor/orientation.hpp"

namespace dyncolor {

OrientedGraph::OrientedGraph(std::size_t n, int d_cap)
    : out_(n), in_(n), d_cap_(std::max(2, d_cap)) {}

void OrientedGraph::set_d_cap(int cap) { d_cap_ = std::max(2, cap); }

void OrientedGraph::check_node(NodeId v) const {
  if (v >= out_.size())
    throw DomainError("node " + std::to_string(v) + " out of range [0, " +
                      std::to_string(out_.size()) + ")");
}

bool OrientedGraph::has_edge(NodeId u, NodeId v) const {
  return edges_.count(pair_key(u, v)) != 0;
}

std::optional<Arc> OrientedGraph::find_edge(NodeId u, NodeId v) const {
  auto it = edges_.find(pair_key(u, v));
  if (it == edges_.end()) return std::nullopt;
  return Arc{it->second.tail, it->second.head};
}

int OrientedGraph::out_degree(NodeId v) const {
  check_node(v);
  return static_cast<int>(out_[v].size());
}

int OrientedGraph::in_degree(NodeId v) const {
  check_node(v);
  return static_cast<int>(in_[v].size());
}

std::span<const NodeId> OrientedGraph::out_heads(NodeId v) const {
  check_node(v);
  return out_[v];
}

std::span<const NodeId> OrientedGraph::in_tails(NodeId v) const {
  check_node(v);
  return in_[v];
}

std::vector<Arc> OrientedGraph::out_arcs(NodeId v) const {
  check_node(v);
  std::vector<Arc> arcs;
  arcs.reserve(out_[v].size());
  for (NodeId w : out_[v]) arcs.push_back({v, w});
  return arcs;
}

std::vector<Arc> OrientedGraph::in_arcs(NodeId v) const {
  check_node(v);
  std::vector<Arc> arcs;
  arcs.reserve(in_[v].size());
  for (NodeId t : in_[v]) arcs.push_back({t, v});
  return arcs;
}

void OrientedGraph::add_arc(NodeId tail, NodeId head) {
  check_node(tail);
  check_node(head);
  if (tail == head) throw SelfLoop("self-loop at node " + std::to_string(tail));
  if (has_edge(tail, head))
    throw DuplicateEdge("edge {" + std::to_string(tail) + "," +
                        std::to_string(head) + "} already present");
  EdgeSlot slot{tail, head, static_cast<std::uint32_t>(out_[tail].size()),
                static_cast<std::uint32_t>(in_[head].size())};
  out_[tail].push_back(head);
  in_[head].push_back(tail);
  edges_.emplace(pair_key(tail, head), slot);
}

void OrientedGraph::remove_arc(NodeId tail, NodeId head) {
  auto it = edges_.find(pair_key(tail, head));
  if (it == edges_.end() || it->second.tail != tail)
    throw MissingEdge("arc (" + std::to_string(tail) + "," +
                      std::to_string(head) + ") not present");
  const EdgeSlot slot = it->second;
  edges_.erase(it);

  auto& outs = out_[tail];
  outs[slot.out_pos] = outs.back();
  outs.pop_back();
  if (slot.out_pos < outs.size())
    edges_.at(pair_key(tail, outs[slot.out_pos])).out_pos = slot.out_pos;

  auto& ins = in_[head];
  ins[slot.in_pos] = ins.back();
  ins.pop_back();
  if (slot.in_pos < ins.size())
    edges_.at(pair_key(ins[slot.in_pos], head)).in_pos = slot.in_pos;
}

void OrientedGraph::flip_arc(NodeId tail, NodeId head) {
  remove_arc(tail, head);
  add_arc(head, tail);
}

void OrientedGraph::reorient(const std::vector<Arc>& arcs) {
  if (arcs.size() != edges_.size())
    throw DomainError("reorient: arc list does not match the edge set");
  for (auto& lst : out_) lst.clear();
  for (auto& lst : in_) lst.clear();
  for (const Arc& a : arcs) {
    auto it = edges_.find(pair_key(a.tail, a.head));
    if (it == edges_.end())
      throw DomainError("reorient: arc for an absent edge");
    EdgeSlot& slot = it->second;
    slot.tail = a.tail;
    slot.head = a.head;
    slot.out_pos = static_cast<std::uint32_t>(out_[a.tail].size());
    slot.in_pos = static_cast<std::uint32_t>(in_[a.head].size());
    out_[a.tail].push_back(a.head);
    in_[a.head].push_back(a.tail);
  }
}

std::vector<Arc> OrientedGraph::insert_edge(NodeId u, NodeId v,
                                            OrientationPolicy& policy) {
  check_node(u);
  check_node(v);
  if (u == v) throw SelfLoop("self-loop at node " + std::to_string(u));
  if (has_edge(u, v))
    throw DuplicateEdge("edge {" + std::to_string(u) + "," +
                        std::to_string(v) + "} already present");
  std::vector<Arc> flips = policy.on_insert(*this, u, v);
  ++epoch_;
  return flips;
}

void OrientedGraph::delete_edge(NodeId u, NodeId v, OrientationPolicy& policy) {
  check_node(u);
  check_node(v);
  const auto arc = find_edge(u, v);
  if (!arc)
    throw MissingEdge("edge {" + std::to_string(u) + "," + std::to_string(v) +
                      "} not present");
  remove_arc(arc->tail, arc->head);
  policy.on_delete(*this, u, v);
  ++epoch_;
}

std::vector<std::pair<NodeId, NodeId>> OrientedGraph::undirected_edges() const {
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(edges_.size());
  for (NodeId v = 0; v < out_.size(); ++v)
    for (NodeId w : out_[v]) edges.emplace_back(v, w);
  return edges;
}

int OrientedGraph::max_out_degree() const {
  std::size_t best = 0;
  for (const auto& lst : out_) best = std::max(best, lst.size());
  return static_cast<int>(best);
}

bool OrientedGraph::lists_consistent() const {
  std::size_t out_total = 0, in_total = 0;
  for (const auto& lst : out_) out_total += lst.size();
  for (const auto& lst : in_) in_total += lst.size();
  if (out_total != edges_.size() || in_total != edges_.size()) return false;
  for (const auto& [key, slot] : edges_) {
    (void)key;
    if (slot.tail >= out_.size() || slot.head >= in_.size()) return false;
    if (slot.out_pos >= out_[slot.tail].size()) return false;
    if (out_[slot.tail][slot.out_pos] != slot.head) return false;
    if (slot.in_pos >= in_[slot.head].size()) return false;
    if (in_[slot.head][slot.in_pos] != slot.tail) return false;
  }
  return true;
}

}  // namespace dyncolor
