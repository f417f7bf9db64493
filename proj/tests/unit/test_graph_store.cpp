#include "doctest.h"

#include <algorithm>
#include <set>

#include "dyncolor/graph_store.hpp"
#include "dyncolor/orientation.hpp"
#include "dyncolor/rng.hpp"

using namespace dyncolor;

TEST_CASE("first edge: one new arc, zero flips") {
  OrientedGraph g(2);
  StaticRecomputePolicy policy;
  const auto flips = g.insert_edge(0, 1, policy);
  CHECK(flips.empty());
  CHECK(g.edge_count() == 1);
  CHECK(g.out_arcs(0) == std::vector<Arc>{{0, 1}});
  CHECK(g.in_arcs(1) == std::vector<Arc>{{0, 1}});
  CHECK(g.lists_consistent());
}

TEST_CASE("duplicate insert and self loop rejected") {
  OrientedGraph g(3);
  StaticRecomputePolicy policy;
  g.insert_edge(0, 1, policy);
  CHECK_THROWS_AS(g.insert_edge(0, 1, policy), DuplicateEdge);
  CHECK_THROWS_AS(g.insert_edge(1, 0, policy), DuplicateEdge);
  CHECK_THROWS_AS(g.insert_edge(2, 2, policy), SelfLoop);
  CHECK(g.edge_count() == 1);
}

TEST_CASE("insert then delete restores the empty graph") {
  OrientedGraph g(2);
  StaticRecomputePolicy policy;
  g.insert_edge(0, 1, policy);
  g.delete_edge(1, 0, policy);  // endpoint order does not matter
  CHECK(g.edge_count() == 0);
  CHECK(g.out_arcs(0).empty());
  CHECK(g.out_arcs(1).empty());
  CHECK(g.in_arcs(0).empty());
  CHECK(g.in_arcs(1).empty());
  CHECK_THROWS_AS(g.delete_edge(0, 1, policy), MissingEdge);
}

TEST_CASE("isolated node has empty arc lists") {
  OrientedGraph g(1);
  CHECK(g.out_arcs(0).empty());
  CHECK(g.in_arcs(0).empty());
  CHECK(g.out_degree(0) == 0);
}

TEST_CASE("epoch advances exactly once per update") {
  OrientedGraph g(4);
  StaticRecomputePolicy policy;
  CHECK(g.epoch() == 0);
  g.insert_edge(0, 1, policy);
  CHECK(g.epoch() == 1);
  g.insert_edge(1, 2, policy);
  CHECK(g.epoch() == 2);
  g.delete_edge(0, 1, policy);
  CHECK(g.epoch() == 3);
  // queries and raw reads never move it
  (void)g.out_arcs(2);
  (void)g.find_edge(1, 2);
  CHECK(g.epoch() == 3);
}

TEST_CASE("star built statically: leaves feed the hub") {
  // K_{1,5}; smallest-last removal order is [1,2,3,4,0,5], so four arcs
  // enter the hub and the hub keeps out-degree 1 <= degeneracy.
  OrientedGraph g(6);
  StaticRecomputePolicy policy;
  for (NodeId i = 1; i <= 5; ++i) g.insert_edge(0, i, policy);
  CHECK(policy.last_degeneracy() == 1);
  CHECK(g.d_cap() == 2);  // floor
  CHECK(g.max_out_degree() <= 1);
  CHECK(g.out_degree(0) == 1);
  CHECK(g.in_degree(0) == 4);
  CHECK(g.lists_consistent());
}

TEST_CASE("triangle minus an edge is a path of degeneracy 1") {
  OrientedGraph g(3);
  StaticRecomputePolicy policy;
  g.insert_edge(0, 1, policy);
  g.insert_edge(1, 2, policy);
  g.insert_edge(2, 0, policy);
  CHECK(policy.last_degeneracy() == 2);
  g.delete_edge(2, 0, policy);
  CHECK(policy.last_degeneracy() == 1);
  CHECK(g.edge_count() == 2);
}

TEST_CASE("4-cycle under AmortizedFlip becomes a directed cycle") {
  OrientedGraph g(4);
  AmortizedFlipPolicy policy;
  g.insert_edge(0, 1, policy);
  g.insert_edge(1, 2, policy);
  g.insert_edge(2, 3, policy);
  g.insert_edge(3, 0, policy);
  for (NodeId v = 0; v < 4; ++v) {
    CHECK(g.out_degree(v) == 1);
    CHECK(g.in_degree(v) == 1);
  }
}

TEST_CASE("swap-remove bookkeeping stays consistent under churn") {
  const std::size_t n = 60;
  OrientedGraph g(n);
  AmortizedFlipPolicy policy(4.0, 16);
  SplitMix64 rng(42);
  std::set<std::pair<NodeId, NodeId>> reference;
  std::uint64_t prev_epoch = g.epoch();
  for (int step = 0; step < 3000; ++step) {
    const NodeId u = static_cast<NodeId>(rng.below(n));
    const NodeId v = static_cast<NodeId>(rng.below(n));
    if (u == v) continue;
    const auto key = std::minmax(u, v);
    if (reference.count(key)) {
      g.delete_edge(u, v, policy);
      reference.erase(key);
    } else {
      g.insert_edge(u, v, policy);
      reference.insert(key);
    }
    CHECK(g.epoch() > prev_epoch);
    prev_epoch = g.epoch();
    REQUIRE(g.lists_consistent());
    REQUIRE(g.edge_count() == reference.size());
    REQUIRE(g.max_out_degree() <= g.d_cap());
  }
  // flips never created or destroyed edges
  std::set<std::pair<NodeId, NodeId>> stored;
  for (auto [a, b] : g.undirected_edges()) stored.insert(std::minmax(a, b));
  CHECK(stored == reference);
}
