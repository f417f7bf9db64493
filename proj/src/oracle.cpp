#include "dyncolor/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace dyncolor::oracle {

std::vector<std::pair<NodeId, NodeId>> verify_proper(
    const std::vector<std::pair<NodeId, NodeId>>& edges,
    const std::vector<int>& colors) {
  std::vector<std::pair<NodeId, NodeId>> conflicts;
  for (const auto& [u, v] : edges) {
    if (u >= colors.size() || v >= colors.size())
      throw DomainError("edge endpoint without a color entry");
    if (colors[u] != 0 && colors[u] == colors[v]) conflicts.emplace_back(u, v);
  }
  return conflicts;
}

namespace {

constexpr std::size_t kSubsetLimit = 12;

std::vector<std::uint32_t> adjacency_masks(
    std::size_t n, const std::vector<std::pair<NodeId, NodeId>>& edges) {
  std::vector<std::uint32_t> adj(n, 0);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) throw DomainError("edge endpoint out of range");
    if (u == v) throw DomainError("self-loop in edge list");
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  return adj;
}

}  // namespace

int brute_degeneracy(std::size_t n,
                     const std::vector<std::pair<NodeId, NodeId>>& edges) {
  if (n > kSubsetLimit)
    throw SizeLimit("brute_degeneracy limited to " +
                    std::to_string(kSubsetLimit) + " nodes");
  const auto adj = adjacency_masks(n, edges);
  int best = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    int min_deg = static_cast<int>(n);
    for (std::size_t v = 0; v < n; ++v) {
      if (!(mask & (1u << v))) continue;
      min_deg = std::min(min_deg, std::popcount(adj[v] & mask));
    }
    best = std::max(best, min_deg);
  }
  return best;
}

int nash_williams_lb(std::size_t n,
                     const std::vector<std::pair<NodeId, NodeId>>& edges) {
  if (n > kSubsetLimit)
    throw SizeLimit("nash_williams_lb limited to " +
                    std::to_string(kSubsetLimit) + " nodes");
  const auto adj = adjacency_masks(n, edges);
  int best = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const int size = std::popcount(mask);
    if (size < 2) continue;
    int twice_edges = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (mask & (1u << v)) twice_edges += std::popcount(adj[v] & mask);
    const int e = twice_edges / 2;
    best = std::max(best, (e + size - 2) / (size - 1));  // ceil(e/(size-1))
  }
  return best;
}

std::vector<double> trigger_pmf_analytic(int d, int threshold_mult) {
  if (d < 2) throw DomainError("d must be at least 2");
  if (threshold_mult < 1) throw DomainError("threshold_mult must be positive");
  const int limit = threshold_mult * d;
  std::vector<double> pmf(limit);
  double survive = 1.0;
  for (int j = 1; j <= limit; ++j) {
    const double p = 1.0 / (limit + 1 - j);
    pmf[j - 1] = survive * p;
    survive *= 1.0 - p;
  }
  return pmf;
}

bool reconstruct_ap_invariant(const ImplicitColorer& state,
                              const OrientedGraph& g) {
  const std::size_t n = g.node_count();
  for (NodeId w = 0; w < n; ++w) {
    if (state.is_colored(w)) continue;
    std::vector<Arc> expected;
    for (NodeId t : g.in_tails(w))
      if (state.is_colored(t)) expected.push_back({t, w});
    std::vector<Arc> actual = state.processed_in(w);
    if (state.processed_count(w) != static_cast<int>(actual.size())) return false;
    if (expected.size() != actual.size()) return false;
    auto key = [](const Arc& a) {
      return (static_cast<std::uint64_t>(a.tail) << 32) | a.head;
    };
    auto cmp = [&](const Arc& a, const Arc& b) { return key(a) < key(b); };
    std::sort(expected.begin(), expected.end(), cmp);
    std::sort(actual.begin(), actual.end(), cmp);
    if (expected != actual) return false;
  }
  return true;
}

}  // namespace dyncolor::oracle
