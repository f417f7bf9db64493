#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dyncolor/graph_store.hpp"
#include "dyncolor/rng.hpp"

namespace dyncolor {

enum class PolicyKind { Deterministic, Randomized };

// min{1/(threshold_mult*d + 1 - count_after), 1}, where count_after counts
// the processed in-arcs of the candidate node including the arc just
// handled. Requires 1 <= count_after <= threshold_mult*d and d >= 2.
double recursion_probability(int count_after, int d, int threshold_mult = 6);

// Decides whether processing an arc into an uncolored node starts a
// recursive call on it. Deterministic: fire once the processed in-arc count
// reaches threshold_mult*d. Randomized: biased coin whose heads probability
// grows with the count and is forced to 1 at the threshold; coins come from
// a seeded generator, so equal seeds replay identical traces.
class RecursionPolicy {
 public:
  static RecursionPolicy deterministic() {
    return RecursionPolicy(PolicyKind::Deterministic, 0);
  }
  static RecursionPolicy randomized(std::uint64_t seed) {
    return RecursionPolicy(PolicyKind::Randomized, seed);
  }

  PolicyKind kind() const { return kind_; }

  bool should_recurse(int count_after, int d, int threshold_mult) {
    if (kind_ == PolicyKind::Deterministic)
      return count_after >= threshold_mult * d;
    return rng_.next_unit() < recursion_probability(count_after, d, threshold_mult);
  }

 private:
  RecursionPolicy(PolicyKind kind, std::uint64_t seed)
      : kind_(kind), rng_(seed) {}

  PolicyKind kind_;
  SplitMix64 rng_;
};

// Telemetry for one color query.
struct QueryReport {
  NodeId node = 0;
  int color = 0;
  int vstar_size = 0;               // 0 when the node was already colored
  std::vector<Arc> trigger_arcs;    // arcs whose processing caused a recursion
  std::uint64_t epoch = 0;
};

// Answers per-node color queries against an externally maintained
// orientation, keeping the colored set, the processed-arc lists, and the
// out-degree snapshot d valid for exactly one epoch (the span between two
// edge updates). All state is invalidated lazily via per-node epoch stamps,
// so updates cost the colorer nothing.
//
// Colors live in [1, palette_mult*d]; 0 means uncolored. A query on an
// uncolored node gathers a set V* by the recursion rule of the active
// policy, then colors V* greedily in reverse smallest-last order.
class ImplicitColorer {
 public:
  ImplicitColorer(std::size_t n, RecursionPolicy policy, int threshold_mult = 6,
                  int palette_mult = 9);

  // Drops all per-epoch state if the graph changed since the last query.
  void begin_epoch_if_stale(const OrientedGraph& g);

  QueryReport query_color(const OrientedGraph& g, NodeId u);

  // The recursion that gathers V* for an uncolored node u, mutating the
  // processed-arc bookkeeping. Exposed separately for tests; query_color is
  // the composition compute_vstar + color_vstar.
  std::vector<NodeId> compute_vstar(const OrientedGraph& g, NodeId u);

  // Colors the (uncolored) nodes of vstar within the palette. Forbidden
  // colors per node: tails of its processed in-arcs, colored out-neighbors,
  // and induced V*-neighbors colored earlier in the pass.
  void color_vstar(const OrientedGraph& g, const std::vector<NodeId>& vstar);

  // Epoch-local views; stale state reads as uncolored/empty.
  bool is_colored(NodeId v) const;
  int color_of(NodeId v) const;
  int processed_count(NodeId v) const;
  std::vector<Arc> processed_in(NodeId v) const;
  int epoch_d() const { return d_; }
  std::size_t colored_count() const { return colored_count_; }
  int threshold_mult() const { return threshold_mult_; }
  int palette_mult() const { return palette_mult_; }

  // Number of per-node cells reset lazily so far; instrumentation for the
  // O(1)-per-update claim.
  std::uint64_t touched_cells() const { return touched_; }

  // Test support: colors v as if it had been processed in an earlier query,
  // keeping the processed-arc bookkeeping of its out-neighbors in sync.
  void force_color(const OrientedGraph& g, NodeId v, int color);

 private:
  struct VstarResult {
    std::vector<NodeId> nodes;
    std::vector<Arc> trigger_arcs;
  };

  void refresh(NodeId v);
  void check_node(NodeId v) const;
  VstarResult gather_vstar(const OrientedGraph& g, NodeId u);

  std::vector<std::uint64_t> stamp_;
  std::vector<int> color_;
  std::vector<int> processed_count_;
  std::vector<std::vector<Arc>> processed_in_;
  std::vector<std::uint8_t> in_vstar_;

  bool epoch_open_ = false;
  std::uint64_t state_epoch_ = 0;
  std::uint64_t generation_ = 0;  // bumped per epoch; stamps compare here
  int d_ = 2;
  std::size_t colored_count_ = 0;
  std::uint64_t touched_ = 0;

  int threshold_mult_;
  int palette_mult_;
  RecursionPolicy policy_;
};

}  // namespace dyncolor
