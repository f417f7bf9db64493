#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "dyncolor/implicit_color.hpp"
#include "dyncolor/oracle.hpp"
#include "dyncolor/orientation.hpp"
#include "dyncolor/rng.hpp"

using namespace dyncolor;

namespace {

// Sampled simple graph inserted through a policy; returns the graph ready
// for queries.
OrientedGraph build_gnm(std::size_t n, std::size_t m, std::uint64_t seed,
                        OrientationPolicy& policy) {
  OrientedGraph g(n);
  SplitMix64 rng(seed);
  std::set<std::pair<NodeId, NodeId>> present;
  while (present.size() < m) {
    NodeId u = static_cast<NodeId>(rng.below(n));
    NodeId v = static_cast<NodeId>(rng.below(n));
    if (u == v) continue;
    if (!present.insert(std::minmax(u, v)).second) continue;
    g.insert_edge(u, v, policy);
  }
  return g;
}

void check_uncolored_counts(const ImplicitColorer& c, const OrientedGraph& g) {
  const int threshold = c.threshold_mult() * c.epoch_d();
  for (NodeId w = 0; w < g.node_count(); ++w) {
    if (c.is_colored(w)) continue;
    REQUIRE(c.processed_count(w) <= threshold);
  }
}

}  // namespace

TEST_CASE("recursion_probability matches the closed form") {
  CHECK(recursion_probability(1, 2) == doctest::Approx(1.0 / 12));
  CHECK(recursion_probability(12, 2) == 1.0);
  CHECK(recursion_probability(10, 3) == doctest::Approx(1.0 / 9));
  CHECK_THROWS_AS(recursion_probability(0, 2), DomainError);
  CHECK_THROWS_AS(recursion_probability(13, 2), DomainError);
  CHECK_THROWS_AS(recursion_probability(1, 1), DomainError);
}

TEST_CASE("isolated node gets color 1 with a singleton V*") {
  OrientedGraph g(3);
  ImplicitColorer c(3, RecursionPolicy::deterministic());
  const auto rep = c.query_color(g, 1);
  CHECK(rep.color == 1);
  CHECK(rep.vstar_size == 1);
  CHECK(rep.trigger_arcs.empty());
  CHECK(c.colored_count() == 1);
}

TEST_CASE("two endpoints of one arc get distinct colors") {
  OrientedGraph g(2);
  g.add_arc(0, 1);
  ImplicitColorer c(2, RecursionPolicy::deterministic());
  const int c0 = c.query_color(g, 0).color;
  const int c1 = c.query_color(g, 1).color;
  CHECK(c0 != c1);
}

TEST_CASE("compute_vstar on a bare node returns just the node") {
  OrientedGraph g(2);
  ImplicitColorer c(2, RecursionPolicy::deterministic());
  CHECK(c.compute_vstar(g, 0) == std::vector<NodeId>{0});
}

TEST_CASE("fresh K_4: every query order yields 4 distinct colors <= 27") {
  std::vector<NodeId> order{0, 1, 2, 3};
  do {
    OrientedGraph g(4);
    StaticRecomputePolicy policy;
    for (NodeId i = 0; i < 4; ++i)
      for (NodeId j = i + 1; j < 4; ++j) g.insert_edge(i, j, policy);
    REQUIRE(g.d_cap() == 3);
    ImplicitColorer c(4, RecursionPolicy::deterministic());
    std::set<int> colors;
    for (NodeId u : order) {
      const int col = c.query_color(g, u).color;
      REQUIRE(col >= 1);
      REQUIRE(col <= 27);  // 9 * d with d = 3
      colors.insert(col);
    }
    REQUIRE(colors.size() == 4);
  } while (std::next_permutation(order.begin(), order.end()));
}

TEST_CASE("queries are stable within an epoch and reset across updates") {
  OrientedGraph g(4);
  AmortizedFlipPolicy policy;
  g.insert_edge(0, 1, policy);
  ImplicitColorer c(4, RecursionPolicy::deterministic());

  const auto first = c.query_color(g, 0);
  const auto again = c.query_color(g, 0);
  CHECK(again.color == first.color);
  CHECK(again.vstar_size == 0);  // already colored, nothing gathered

  g.insert_edge(2, 3, policy);  // epoch moves; state is stale now
  const auto after = c.query_color(g, 0);
  CHECK(after.vstar_size >= 1);  // re-colored from scratch
  CHECK(c.colored_count() >= 1);
}

TEST_CASE("deterministic recursion fires exactly at the 6d threshold") {
  // Hub with 12 pendant leaves: d = 2, so the 12th processed in-arc and
  // none before it must pull the hub into V*.
  const std::size_t n = 13;
  const NodeId hub = 12;
  OrientedGraph g(n);
  StaticRecomputePolicy policy;
  for (NodeId leaf = 0; leaf < 12; ++leaf) g.insert_edge(leaf, hub, policy);
  REQUIRE(g.d_cap() == 2);
  REQUIRE(g.in_degree(hub) == 12);  // leaves point at the hub

  ImplicitColorer c(n, RecursionPolicy::deterministic());
  for (NodeId leaf = 0; leaf < 11; ++leaf) {
    const auto rep = c.query_color(g, leaf);
    REQUIRE(rep.vstar_size == 1);  // below threshold: no recursion
    REQUIRE(rep.trigger_arcs.empty());
  }
  CHECK(c.processed_count(hub) == 11);
  const auto rep = c.query_color(g, 11);
  CHECK(rep.vstar_size == 2);  // leaf 11 plus the hub
  REQUIRE(rep.trigger_arcs.size() == 1);
  CHECK(rep.trigger_arcs[0] == Arc{11, hub});
  CHECK(c.is_colored(hub));
  check_uncolored_counts(c, g);
}

TEST_CASE("randomized recursion is forced once the count reaches 6d") {
  const std::size_t n = 13;
  const NodeId hub = 12;
  for (std::uint64_t seed : {1ULL, 99ULL, 123456ULL}) {
    OrientedGraph g(n);
    StaticRecomputePolicy policy;
    for (NodeId leaf = 0; leaf < 12; ++leaf) g.insert_edge(leaf, hub, policy);
    ImplicitColorer c(n, RecursionPolicy::randomized(seed));
    for (NodeId leaf = 0; leaf < 12; ++leaf) c.query_color(g, leaf);
    // whatever the coins did earlier, by the 12th processed arc the hub is in
    CHECK(c.is_colored(hub));
    check_uncolored_counts(c, g);
  }
}

TEST_CASE("color_vstar on a fresh triangle uses colors {1,2,3}") {
  OrientedGraph g(3);
  StaticRecomputePolicy policy;
  g.insert_edge(0, 1, policy);
  g.insert_edge(0, 2, policy);
  g.insert_edge(1, 2, policy);
  REQUIRE(g.d_cap() == 2);
  ImplicitColorer c(3, RecursionPolicy::deterministic());
  c.color_vstar(g, {0, 1, 2});
  // greedy in reverse smallest-last order [0,1,2]
  CHECK(c.color_of(2) == 1);
  CHECK(c.color_of(1) == 2);
  CHECK(c.color_of(0) == 3);
}

TEST_CASE("a node with a crowded neighborhood still finds a color in 9d") {
  // d = 2. Center 0 carries: 12 colored in-neighbors (colors 1..12), two
  // colored out-neighbors (13, 14), and three uncolored in-neighbors that
  // join its V*. Forbidden <= 6d + d + (2d-1) = 17 < 18.
  const std::size_t n = 18;
  OrientedGraph g(n);
  for (NodeId t = 1; t <= 12; ++t) g.add_arc(t, 0);
  g.add_arc(0, 13);
  g.add_arc(0, 14);
  for (NodeId x = 15; x <= 17; ++x) g.add_arc(x, 0);
  g.set_d_cap(2);

  ImplicitColorer c(n, RecursionPolicy::deterministic());
  for (NodeId t = 1; t <= 12; ++t) c.force_color(g, t, static_cast<int>(t));
  c.force_color(g, 13, 13);
  c.force_color(g, 14, 14);
  CHECK(c.processed_count(0) == 12);  // exactly the 6d boundary

  c.color_vstar(g, {0, 15, 16, 17});
  CHECK(c.color_of(0) == 15);  // smallest color past the 14 forbidden ones
  CHECK(c.color_of(15) == 1);
  CHECK(c.color_of(16) == 1);
  CHECK(c.color_of(17) == 1);
  for (NodeId v : {0, 15, 16, 17}) CHECK(c.color_of(v) <= 18);
}

TEST_CASE("palette exhaustion throws when the precondition is violated") {
  // Deliberately break the 6d bound: 18 pre-colored in-neighbors with
  // distinct colors leave no color in [1, 18] for the center at d = 2.
  const std::size_t n = 19;
  OrientedGraph g(n);
  for (NodeId t = 1; t <= 18; ++t) g.add_arc(t, 0);
  g.set_d_cap(2);
  ImplicitColorer c(n, RecursionPolicy::deterministic());
  for (NodeId t = 1; t <= 18; ++t) c.force_color(g, t, static_cast<int>(t));
  CHECK_THROWS_AS(c.color_vstar(g, {0}), PaletteExhausted);
}

TEST_CASE("updates cost the colorer nothing until the next query") {
  const std::size_t n = 500;
  OrientedGraph g(n);
  AmortizedFlipPolicy policy(4.0, 128);
  ImplicitColorer c(n, RecursionPolicy::deterministic());
  c.query_color(g, 7);
  const std::uint64_t touched_before = c.touched_cells();
  for (int i = 0; i < 100000; ++i) {
    g.insert_edge(1, 2, policy);
    g.delete_edge(1, 2, policy);
  }
  CHECK(c.touched_cells() == touched_before);  // no eager clearing
  c.query_color(g, 3);  // isolated node: the lazy reset touches O(1) cells
  CHECK(c.touched_cells() <= touched_before + 2);
}

TEST_CASE("amortized bound: colored set stays within 6i/5 + 1 per prefix") {
  // Fresh graphs, deterministic policy; check every query prefix.
  const std::size_t n = 120;
  for (std::uint64_t seed : {3ULL, 8ULL}) {
    StaticRecomputePolicy policy;
    OrientedGraph g = build_gnm(n, 3 * n, seed, policy);
    ImplicitColorer c(n, RecursionPolicy::deterministic());
    std::vector<NodeId> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    SplitMix64 rng(seed);
    for (std::size_t i = n; i > 1; --i) std::swap(ids[i - 1], ids[rng.below(i)]);
    std::size_t queried = 0;
    for (NodeId u : ids) {
      c.query_color(g, u);
      ++queried;
      REQUIRE(c.colored_count() <= (6 * queried) / 5 + 1);
      check_uncolored_counts(c, g);
    }
    // the sweep must be proper
    std::vector<int> colors(n);
    for (NodeId v = 0; v < n; ++v) colors[v] = c.color_of(v);
    CHECK(oracle::verify_proper(g.undirected_edges(), colors).empty());
  }
}

TEST_CASE("identical seeds replay identical traces") {
  const std::size_t n = 150;
  StaticRecomputePolicy pa, pb;
  OrientedGraph ga = build_gnm(n, 450, 17, pa);
  OrientedGraph gb = build_gnm(n, 450, 17, pb);
  ImplicitColorer ca(n, RecursionPolicy::randomized(101));
  ImplicitColorer cb(n, RecursionPolicy::randomized(101));
  for (NodeId u = 0; u < n; ++u) {
    const auto ra = ca.query_color(ga, u);
    const auto rb = cb.query_color(gb, u);
    REQUIRE(ra.color == rb.color);
    REQUIRE(ra.vstar_size == rb.vstar_size);
    REQUIRE(ra.trigger_arcs == rb.trigger_arcs);
  }
}

TEST_CASE("randomized sweeps are proper and respect the palette") {
  const std::size_t n = 200;
  for (std::uint64_t seed : {5ULL, 6ULL, 7ULL}) {
    StaticRecomputePolicy policy;
    OrientedGraph g = build_gnm(n, 600, seed, policy);
    ImplicitColorer c(n, RecursionPolicy::randomized(seed * 13 + 1));
    for (NodeId u = 0; u < n; ++u) {
      const auto rep = c.query_color(g, u);
      REQUIRE(rep.color >= 1);
      REQUIRE(rep.color <= 9 * c.epoch_d());
      check_uncolored_counts(c, g);
    }
    std::vector<int> colors(n);
    for (NodeId v = 0; v < n; ++v) colors[v] = c.color_of(v);
    CHECK(oracle::verify_proper(g.undirected_edges(), colors).empty());
    CHECK(oracle::reconstruct_ap_invariant(c, g));
  }
}

TEST_CASE("threshold multiplier is an honest knob") {
  // With threshold_mult = 2 and d = 2, the 4th processed in-arc triggers.
  const std::size_t n = 5;
  const NodeId hub = 4;
  OrientedGraph g(n);
  StaticRecomputePolicy policy;
  for (NodeId leaf = 0; leaf < 4; ++leaf) g.insert_edge(leaf, hub, policy);
  ImplicitColorer c(n, RecursionPolicy::deterministic(), /*threshold_mult=*/2,
                    /*palette_mult=*/9);
  for (NodeId leaf = 0; leaf < 3; ++leaf)
    CHECK(c.query_color(g, leaf).vstar_size == 1);
  CHECK(c.query_color(g, 3).vstar_size == 2);
  CHECK(c.is_colored(hub));
}
