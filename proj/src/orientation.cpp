#include "dyncolor/orientation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dyncolor/degeneracy.hpp"

namespace dyncolor {

namespace {

// Recomputes the smallest-last orientation of the whole graph in place.
// Returns the exact degeneracy; flip events are appended if requested.
int reorient_smallest_last(OrientedGraph& g, std::vector<Arc>* flips) {
  std::vector<NodeId> nodes(g.node_count());
  std::iota(nodes.begin(), nodes.end(), 0);
  const auto edges = g.undirected_edges();
  const DegeneracyOrder ord = smallest_last(nodes, edges);

  std::vector<int> rank(g.node_count());
  for (std::size_t i = 0; i < ord.order.size(); ++i) rank[ord.order[i]] = static_cast<int>(i);

  std::vector<Arc> desired;
  desired.reserve(edges.size());
  std::size_t changed = 0;
  for (const auto& [tail, head] : edges) {
    if (rank[tail] > rank[head]) {
      desired.push_back({head, tail});
      ++changed;
      if (flips) flips->push_back({head, tail});
    } else {
      desired.push_back({tail, head});
    }
  }
  if (changed > 0) g.reorient(desired);
  return ord.degeneracy;
}

}  // namespace

std::vector<Arc> StaticRecomputePolicy::on_insert(OrientedGraph& g, NodeId u,
                                                  NodeId v) {
  g.add_arc(u, v);
  std::vector<Arc> flips;
  last_degeneracy_ = reorient_smallest_last(g, &flips);
  g.set_d_cap(last_degeneracy_);
  return flips;
}

void StaticRecomputePolicy::on_delete(OrientedGraph& g, NodeId, NodeId) {
  last_degeneracy_ = reorient_smallest_last(g, nullptr);
  g.set_d_cap(last_degeneracy_);
}

AmortizedFlipPolicy::AmortizedFlipPolicy(double cap_multiplier,
                                         int rebuild_interval)
    : cap_multiplier_(cap_multiplier), rebuild_interval_(rebuild_interval) {
  if (cap_multiplier_ < 2.0)
    throw DomainError("cap_multiplier must be at least 2");
  if (rebuild_interval_ < 1)
    throw DomainError("rebuild_interval must be at least 1");
}

void AmortizedFlipPolicy::refresh_cap(OrientedGraph& g) {
  const int bound =
      static_cast<int>(std::ceil(cap_multiplier_ * alpha_est_));
  g.set_d_cap(bound);  // floor of 2 applied by the graph
}

void AmortizedFlipPolicy::full_rebuild(OrientedGraph& g,
                                       std::vector<Arc>* flips) {
  const int degen = reorient_smallest_last(g, flips);
  // ceil(degeneracy / 2) lower-bounds nothing and over-estimates nothing
  // harmful: alpha <= degeneracy <= 2*alpha, so this keeps
  // cap <= cap_multiplier * degeneracy + 2 while cap >= degeneracy.
  int est = (degen + 1) / 2;
  if (g.node_count() > 1) {
    const std::size_t density =
        (g.edge_count() + g.node_count() - 2) / (g.node_count() - 1);
    est = std::max(est, static_cast<int>(density));
  }
  alpha_est_ = est;
  refresh_cap(g);
  deletes_since_rebuild_ = 0;
}

std::vector<Arc> AmortizedFlipPolicy::on_insert(OrientedGraph& g, NodeId u,
                                                NodeId v) {
  NodeId tail, head;
  const int du = g.out_degree(u), dv = g.out_degree(v);
  if (du < dv || (du == dv && u < v)) {
    tail = u;
    head = v;
  } else {
    tail = v;
    head = u;
  }
  g.add_arc(tail, head);
  std::vector<Arc> flips;
  if (tail != u) flips.push_back({tail, head});

  if (g.node_count() > 1) {
    const std::size_t density =
        (g.edge_count() + g.node_count() - 2) / (g.node_count() - 1);
    if (static_cast<int>(density) > alpha_est_) {
      alpha_est_ = static_cast<int>(density);
      refresh_cap(g);
    }
  }

  if (g.out_degree(tail) <= g.d_cap()) return flips;

  // Overflow cascade. If it churns past the budget the cap is too small for
  // the current graph; a rebuild restores every invariant in one O(n+m) pass.
  const std::size_t budget = 4 * (g.edge_count() + g.node_count());
  std::size_t work = 0;
  std::vector<NodeId> queue{tail};
  std::size_t qi = 0;
  while (qi < queue.size()) {
    const NodeId x = queue[qi++];
    if (g.out_degree(x) <= g.d_cap()) continue;
    const std::vector<NodeId> heads(g.out_heads(x).begin(),
                                    g.out_heads(x).end());
    for (NodeId w : heads) {
      g.flip_arc(x, w);
      flips.push_back({w, x});
      if (g.out_degree(w) > g.d_cap()) queue.push_back(w);
    }
    work += heads.size();
    if (work > budget) {
      full_rebuild(g, &flips);
      return flips;
    }
  }
  return flips;
}

void AmortizedFlipPolicy::on_delete(OrientedGraph& g, NodeId, NodeId) {
  ++deletes_since_rebuild_;
  if (deletes_since_rebuild_ >= rebuild_interval_) full_rebuild(g, nullptr);
}

std::unique_ptr<OrientationPolicy> make_policy(const OrientationStrategy& s) {
  if (s.kind == OrientationKind::StaticRecompute)
    return std::make_unique<StaticRecomputePolicy>();
  return std::make_unique<AmortizedFlipPolicy>(s.cap_multiplier,
                                               s.rebuild_interval);
}

}  // namespace dyncolor
