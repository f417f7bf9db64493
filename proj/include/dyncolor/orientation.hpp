#pragma once

#include <memory>
#include <vector>

#include "dyncolor/graph_store.hpp"

namespace dyncolor {

enum class OrientationKind { StaticRecompute, AmortizedFlip };

struct OrientationStrategy {
  OrientationKind kind = OrientationKind::StaticRecompute;
  double cap_multiplier = 4.0;  // AmortizedFlip only; must be >= 2
  int rebuild_interval = 128;   // AmortizedFlip only; rebuild every this many deletions
};

// Keeps every node's out-degree at most d_cap as edges come and go, for a
// d_cap that tracks a constant multiple of the graph's degeneracy. The
// coloring layer consumes only this contract (the arc lists plus
// current_cap), so implementations are substitutable.
class OrientationPolicy {
 public:
  virtual ~OrientationPolicy() = default;

  // Called by OrientedGraph::insert_edge with the edge validated but not yet
  // stored. Must add exactly one arc for {u,v}; may flip existing arcs and
  // adjust d_cap. Returns the applied flips (see insert_edge).
  virtual std::vector<Arc> on_insert(OrientedGraph& g, NodeId u, NodeId v) = 0;

  // Called by OrientedGraph::delete_edge after the arc has been removed.
  virtual void on_delete(OrientedGraph& g, NodeId u, NodeId v) = 0;

  // Out-degree bound currently guaranteed; always >= 2.
  int current_cap(const OrientedGraph& g) const { return g.d_cap(); }
};

// Full Matula-Beck reorientation on every update: d_cap equals
// max(2, exact degeneracy) at all times. O(n + m) per update; serves as the
// correctness reference for the cheaper policy below.
class StaticRecomputePolicy final : public OrientationPolicy {
 public:
  std::vector<Arc> on_insert(OrientedGraph& g, NodeId u, NodeId v) override;
  void on_delete(OrientedGraph& g, NodeId u, NodeId v) override;
  int last_degeneracy() const { return last_degeneracy_; }

 private:
  int last_degeneracy_ = 0;
};

// Brodal-Fagerberg style maintenance: a new edge leaves the endpoint with
// the smaller out-degree (ties toward the smaller id); a node pushed past
// d_cap has all out-arcs flipped inward, re-checking transitively. A cascade
// that exceeds its work budget falls back to a full rebuild, which also
// re-derives d_cap from the exact degeneracy; deletions trigger a rebuild
// every rebuild_interval ops so the cap tracks shrinking arboricity.
class AmortizedFlipPolicy final : public OrientationPolicy {
 public:
  explicit AmortizedFlipPolicy(double cap_multiplier = 4.0,
                               int rebuild_interval = 128);

  std::vector<Arc> on_insert(OrientedGraph& g, NodeId u, NodeId v) override;
  void on_delete(OrientedGraph& g, NodeId u, NodeId v) override;

 private:
  void refresh_cap(OrientedGraph& g);
  void full_rebuild(OrientedGraph& g, std::vector<Arc>* flips);

  double cap_multiplier_;
  int rebuild_interval_;
  int alpha_est_ = 0;
  int deletes_since_rebuild_ = 0;
};

std::unique_ptr<OrientationPolicy> make_policy(const OrientationStrategy& s);

}  // namespace dyncolor
