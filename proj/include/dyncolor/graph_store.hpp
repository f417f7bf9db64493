#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dyncolor/errors.hpp"

namespace dyncolor {

// Dense node index in [0, n). Nodes are pre-declared per run; there is no
// node creation or deletion mid-run.
using NodeId = std::uint32_t;

struct Arc {
  NodeId tail;
  NodeId head;
  friend bool operator==(const Arc&, const Arc&) = default;
};

class OrientationPolicy;  // orientation.hpp

// Dynamic simple graph over a fixed node set, stored as an orientation:
// every edge {u,v} is present under exactly one direction, with per-node
// out-arc and in-arc lists plus a hash index for O(1) expected
// insert/delete/lookup (deletion is swap-remove with position fixup).
//
// The out-degree cap d_cap is owned by the orientation policy; this class
// only stores it. The epoch counter advances exactly once per successful
// insert_edge/delete_edge and never otherwise; the coloring layer uses it
// to invalidate per-epoch state lazily.
class OrientedGraph {
 public:
  explicit OrientedGraph(std::size_t n, int d_cap = 2);

  std::size_t node_count() const { return out_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::uint64_t epoch() const { return epoch_; }

  int d_cap() const { return d_cap_; }
  void set_d_cap(int cap);  // clamped to the floor of 2

  bool has_edge(NodeId u, NodeId v) const;
  // Oriented arc currently stored for {u,v}, if any.
  std::optional<Arc> find_edge(NodeId u, NodeId v) const;

  int out_degree(NodeId v) const;
  int in_degree(NodeId v) const;
  std::span<const NodeId> out_heads(NodeId v) const;
  std::span<const NodeId> in_tails(NodeId v) const;
  std::vector<Arc> out_arcs(NodeId v) const;
  std::vector<Arc> in_arcs(NodeId v) const;

  // Edge updates. The orientation policy decides the direction of the new
  // arc and may flip existing arcs; the returned list holds every applied
  // flip in its new direction, with the fresh arc included only when it was
  // stored opposite to the (u, v) call order.
  std::vector<Arc> insert_edge(NodeId u, NodeId v, OrientationPolicy& policy);
  void delete_edge(NodeId u, NodeId v, OrientationPolicy& policy);

  // Raw arc operations used by orientation policies. No epoch change.
  void add_arc(NodeId tail, NodeId head);
  void remove_arc(NodeId tail, NodeId head);
  void flip_arc(NodeId tail, NodeId head);
  // Replaces the orientation wholesale; `arcs` must cover exactly the
  // current edge set. One hash lookup per edge, no churn in the index.
  void reorient(const std::vector<Arc>& arcs);

  // Current edge set with tail/head in stored orientation order.
  std::vector<std::pair<NodeId, NodeId>> undirected_edges() const;

  int max_out_degree() const;
  // Full-scan cross-check of the out/in lists against the edge index.
  bool lists_consistent() const;

 private:
  struct EdgeSlot {
    NodeId tail;
    NodeId head;
    std::uint32_t out_pos;
    std::uint32_t in_pos;
  };

  static std::uint64_t pair_key(NodeId u, NodeId v) {
    const NodeId a = u < v ? u : v;
    const NodeId b = u < v ? v : u;
    return (static_cast<std::uint64_t>(a) << 32) | b;
  }
  void check_node(NodeId v) const;

  std::vector<std::vector<NodeId>> out_;  // out_[v] = heads of arcs leaving v
  std::vector<std::vector<NodeId>> in_;   // in_[v] = tails of arcs entering v
  std::unordered_map<std::uint64_t, EdgeSlot> edges_;
  std::uint64_t epoch_ = 0;
  int d_cap_;
};

}  // namespace dyncolor
