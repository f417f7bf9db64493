#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "dyncolor/implicit_color.hpp"
#include "dyncolor/orientation.hpp"

namespace dyncolor {

// Part count for a target arboricity estimate: ceil(alpha / ceil(log2 n)),
// at least 1. Requires alpha_estimate >= 1 and n >= 2.
int choose_k(int alpha_estimate, std::size_t n);

// Splits the vertices into k parts by a seeded hash and runs an independent
// orientation + coloring stack on each part's induced subgraph. Parts use
// disjoint global color ranges, so cross-part edges can never conflict and
// each part only has to handle a sparser graph.
class PartitionedColorer {
 public:
  PartitionedColorer(std::size_t n, int k, std::uint64_t seed,
                     const OrientationStrategy& strategy, PolicyKind policy,
                     int threshold_mult = 6, int palette_mult = 9);

  int part_count() const { return k_; }
  // Pure in (node, seed, k); stable for the whole run.
  int part_of(NodeId v) const;

  // Width of each part's color band under the current caps.
  int range_width() const;

  // Applies the update to the global graph; forwards it to the owning
  // part's instance only when both endpoints hash to the same part.
  std::vector<Arc> insert_edge(NodeId u, NodeId v);
  void delete_edge(NodeId u, NodeId v);

  struct GlobalQuery {
    QueryReport report;   // local report from the owning part
    int part = 0;
    int global_color = 0;  // part * range_width + local color
  };
  GlobalQuery query_color_global(NodeId u);

  const OrientedGraph& global_graph() const { return global_; }
  const OrientedGraph& part_graph(int p) const { return parts_[p]->graph; }
  const ImplicitColorer& part_colorer(int p) const { return parts_[p]->colorer; }

 private:
  struct Part {
    OrientedGraph graph;
    std::unique_ptr<OrientationPolicy> policy;
    ImplicitColorer colorer;
    Part(std::size_t n, const OrientationStrategy& s, RecursionPolicy rp,
         int threshold_mult, int palette_mult)
        : graph(n),
          policy(make_policy(s)),
          colorer(n, rp, threshold_mult, palette_mult) {}
  };

  int k_;
  std::uint64_t seed_;
  int palette_mult_;
  OrientedGraph global_;
  std::unique_ptr<OrientationPolicy> global_policy_;
  std::vector<std::unique_ptr<Part>> parts_;
};

}  // namespace dyncolor
