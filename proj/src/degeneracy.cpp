#include "dyncolor/degeneracy.hpp"

#include <algorithm>
#include <string>

namespace dyncolor {

namespace {

// Local index for a (possibly sparse) subset of global node ids.
std::vector<int> build_index(const std::vector<NodeId>& nodes, NodeId max_id) {
  std::vector<int> idx(static_cast<std::size_t>(max_id) + 1, -1);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (idx[nodes[i]] != -1)
      throw DomainError("duplicate node " + std::to_string(nodes[i]));
    idx[nodes[i]] = static_cast<int>(i);
  }
  return idx;
}

}  // namespace

DegeneracyOrder smallest_last(
    const std::vector<NodeId>& nodes,
    const std::vector<std::pair<NodeId, NodeId>>& edges) {
  DegeneracyOrder result;
  const std::size_t k = nodes.size();
  if (k == 0) {
    if (!edges.empty()) throw DomainError("edges given without nodes");
    return result;
  }
  const NodeId max_id = *std::max_element(nodes.begin(), nodes.end());
  const std::vector<int> idx = build_index(nodes, max_id);

  // CSR adjacency over local indices.
  std::vector<int> deg(k, 0);
  for (const auto& [a, b] : edges) {
    if (a > max_id || b > max_id || idx[a] < 0 || idx[b] < 0)
      throw DomainError("edge endpoint outside the node set");
    if (a == b) throw DomainError("self-loop in edge list");
    ++deg[idx[a]];
    ++deg[idx[b]];
  }
  std::vector<std::size_t> offset(k + 1, 0);
  for (std::size_t i = 0; i < k; ++i) offset[i + 1] = offset[i] + deg[i];
  std::vector<int> adj(offset[k]);
  {
    std::vector<std::size_t> cursor(offset.begin(), offset.end() - 1);
    for (const auto& [a, b] : edges) {
      const int la = idx[a], lb = idx[b];
      adj[cursor[la]++] = lb;
      adj[cursor[lb]++] = la;
    }
  }

  // Bucket queue keyed by current degree. Entries go stale when a degree
  // drops; pops compact the lowest bucket and take the smallest NodeId
  // among the still-valid entries.
  std::vector<std::vector<int>> bucket(k);
  for (std::size_t i = 0; i < k; ++i) bucket[deg[i]].push_back(static_cast<int>(i));
  std::vector<char> removed(k, 0);
  std::size_t cur = 0;

  result.order.reserve(k);
  for (std::size_t step = 0; step < k; ++step) {
    int pick = -1;
    for (;;) {
      while (cur < k && bucket[cur].empty()) ++cur;
      auto& b = bucket[cur];
      std::size_t write = 0;
      pick = -1;
      std::size_t pick_pos = 0;
      for (std::size_t read = 0; read < b.size(); ++read) {
        const int x = b[read];
        if (removed[x] || deg[x] != static_cast<int>(cur)) continue;  // stale
        b[write] = x;
        if (pick < 0 || nodes[x] < nodes[pick]) {
          pick = x;
          pick_pos = write;
        }
        ++write;
      }
      b.resize(write);
      if (pick >= 0) {
        b[pick_pos] = b.back();
        b.pop_back();
        break;
      }
    }

    removed[pick] = 1;
    result.degeneracy = std::max(result.degeneracy, deg[pick]);
    result.order.push_back(nodes[pick]);
    for (std::size_t e = offset[pick]; e < offset[pick + 1]; ++e) {
      const int y = adj[e];
      if (removed[y]) continue;
      --deg[y];
      bucket[deg[y]].push_back(y);
      if (static_cast<std::size_t>(deg[y]) < cur) cur = deg[y];
    }
  }
  return result;
}

std::vector<Arc> orient_by_order(
    const DegeneracyOrder& order,
    const std::vector<std::pair<NodeId, NodeId>>& edges) {
  NodeId max_id = 0;
  for (NodeId v : order.order) max_id = std::max(max_id, v);
  std::vector<int> rank(static_cast<std::size_t>(max_id) + 1, -1);
  for (std::size_t i = 0; i < order.order.size(); ++i)
    rank[order.order[i]] = static_cast<int>(i);

  std::vector<Arc> arcs;
  arcs.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a > max_id || b > max_id || rank[a] < 0 || rank[b] < 0)
      throw DomainError("edge endpoint not covered by the order");
    if (a == b) throw DomainError("self-loop in edge list");
    arcs.push_back(rank[a] < rank[b] ? Arc{a, b} : Arc{b, a});
  }
  return arcs;
}

}  // namespace dyncolor
