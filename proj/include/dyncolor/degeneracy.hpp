#pragma once

#include <utility>
#include <vector>

#include "dyncolor/graph_store.hpp"

namespace dyncolor {

// Smallest-last elimination order. order[0] is the node removed first; every
// node has at most `degeneracy` neighbors later in the order, and the bound
// is minimal for the input subgraph.
struct DegeneracyOrder {
  std::vector<NodeId> order;
  int degeneracy = 0;
};

// Repeatedly removes a minimum-degree node, ties broken by smallest NodeId.
// Bucket queue with lazy entries; near-linear in |nodes| + |edges|.
// `edges` must join nodes from `nodes` (DomainError otherwise).
DegeneracyOrder smallest_last(
    const std::vector<NodeId>& nodes,
    const std::vector<std::pair<NodeId, NodeId>>& edges);

// Orients each edge from its earlier endpoint to its later one. The result
// is acyclic with out-degree at most order.degeneracy.
std::vector<Arc> orient_by_order(
    const DegeneracyOrder& order,
    const std::vector<std::pair<NodeId, NodeId>>& edges);

}  // namespace dyncolor
