#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dyncolor/graph_store.hpp"
#include "dyncolor/implicit_color.hpp"

// Brute-force validators used by tests and the acceptance suite. They share
// no code with the algorithms they check: degeneracy and arboricity come
// from subset enumeration, properness from an exhaustive edge scan, and the
// trigger distribution from the bare probability product.
namespace dyncolor::oracle {

// Edges whose endpoints carry the same nonzero color.
std::vector<std::pair<NodeId, NodeId>> verify_proper(
    const std::vector<std::pair<NodeId, NodeId>>& edges,
    const std::vector<int>& colors);

// Exact degeneracy by enumerating all vertex subsets; n <= 12 (SizeLimit).
int brute_degeneracy(std::size_t n,
                     const std::vector<std::pair<NodeId, NodeId>>& edges);

// Exact arboricity via the Nash-Williams maximum over subsets; n <= 12.
int nash_williams_lb(std::size_t n,
                     const std::vector<std::pair<NodeId, NodeId>>& edges);

// Distribution of the first-heads position for a node fed threshold_mult*d
// sequential processed in-arcs: entry j-1 holds
// P(first heads at arc j) = prod_{l<j} (1 - p_l) * p_j with
// p_l = 1/(threshold_mult*d + 1 - l), evaluated by direct product. The
// telescoping identity makes every entry 1/(threshold_mult*d).
std::vector<double> trigger_pmf_analytic(int d, int threshold_mult = 6);

// Rebuilds the expected processed-arc lists from colored-set membership
// ((v,w) processed iff v colored) and compares against the stored state.
bool reconstruct_ap_invariant(const ImplicitColorer& state,
                              const OrientedGraph& g);

}  // namespace dyncolor::oracle
