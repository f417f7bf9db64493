#include "dyncolor/workload.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "dyncolor/rng.hpp"

namespace dyncolor {

namespace {

std::uint64_t edge_key(NodeId u, NodeId v) {
  const NodeId a = std::min(u, v), b = std::max(u, v);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

NodeId parse_id(const std::string& tok, std::size_t n, int line) {
  std::size_t pos = 0;
  unsigned long val = 0;
  try {
    val = std::stoul(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(line, "expected a node id, got '" + tok + "'");
  }
  if (pos != tok.size())
    throw ParseError(line, "trailing characters in node id '" + tok + "'");
  if (val >= n)
    throw ParseError(line, "node id " + tok + " not below n=" +
                               std::to_string(n));
  return static_cast<NodeId>(val);
}

}  // namespace

Workload parse_workload(std::istream& in) {
  Workload w;
  bool have_header = false;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::string op;
    if (!(ls >> op)) continue;  // blank or comment-only line

    if (op == "n") {
      if (have_header) throw ParseError(line, "duplicate header");
      long long count = -1;
      if (!(ls >> count) || count < 1)
        throw ParseError(line, "header must be 'n <count>' with count >= 1");
      w.n = static_cast<std::size_t>(count);
      have_header = true;
    } else if (op == "+" || op == "-") {
      if (!have_header) throw ParseError(line, "event before 'n' header");
      std::string su, sv;
      if (!(ls >> su >> sv))
        throw ParseError(line, "'" + op + "' needs two node ids");
      const NodeId u = parse_id(su, w.n, line);
      const NodeId v = parse_id(sv, w.n, line);
      if (u == v) throw ParseError(line, "self-loop {" + su + "," + sv + "}");
      w.events.push_back({op == "+" ? WorkloadEvent::Kind::Insert
                                    : WorkloadEvent::Kind::Delete,
                          u, v});
    } else if (op == "?") {
      if (!have_header) throw ParseError(line, "event before 'n' header");
      std::string su;
      if (!(ls >> su)) throw ParseError(line, "'?' needs a node id");
      w.events.push_back(
          {WorkloadEvent::Kind::Query, parse_id(su, w.n, line), 0});
    } else if (op == "!") {
      if (!have_header) throw ParseError(line, "event before 'n' header");
      std::string what;
      if (!(ls >> what) || what != "all")
        throw ParseError(line, "'!' supports only '! all'");
      w.events.push_back({WorkloadEvent::Kind::SweepAll, 0, 0});
    } else {
      throw ParseError(line, "unknown event '" + op + "'");
    }
    std::string extra;
    if (ls >> extra) throw ParseError(line, "trailing token '" + extra + "'");
  }
  if (!have_header) throw ParseError(line == 0 ? 1 : line, "missing 'n' header");
  return w;
}

Workload parse_workload_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open workload file: " + path);
  return parse_workload(in);
}

std::string format_workload(const Workload& w) {
  std::ostringstream out;
  out << "n " << w.n << "\n";
  for (const auto& e : w.events) {
    switch (e.kind) {
      case WorkloadEvent::Kind::Insert:
        out << "+ " << e.u << " " << e.v << "\n";
        break;
      case WorkloadEvent::Kind::Delete:
        out << "- " << e.u << " " << e.v << "\n";
        break;
      case WorkloadEvent::Kind::Query:
        out << "? " << e.u << "\n";
        break;
      case WorkloadEvent::Kind::SweepAll:
        out << "! all\n";
        break;
    }
  }
  return out.str();
}

void write_workload_file(const Workload& w, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write workload file: " + path);
  out << format_workload(w);
}

namespace {

std::vector<std::pair<NodeId, NodeId>> random_edges(std::size_t n,
                                                    std::size_t m,
                                                    SplitMix64& rng) {
  if (n < 2 && m > 0) throw DomainError("edges need at least 2 nodes");
  if (m > n * (n - 1) / 2) throw DomainError("m exceeds the simple-graph bound");
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(m);
  std::unordered_set<std::uint64_t> present;
  present.reserve(m * 2);
  while (edges.size() < m) {
    const NodeId u = static_cast<NodeId>(rng.below(n));
    const NodeId v = static_cast<NodeId>(rng.below(n));
    if (u == v) continue;
    if (!present.insert(edge_key(u, v)).second) continue;
    edges.emplace_back(u, v);
  }
  return edges;
}

void shuffle_ids(std::vector<NodeId>& ids, SplitMix64& rng) {
  for (std::size_t i = ids.size(); i > 1; --i)
    std::swap(ids[i - 1], ids[rng.below(i)]);
}

std::vector<std::pair<NodeId, NodeId>> family_edges(std::size_t n,
                                                    const std::string& family,
                                                    SplitMix64& rng) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  if (n < 2) throw DomainError("family graphs need n >= 2");
  const auto nid = [](std::size_t x) { return static_cast<NodeId>(x); };
  if (family == "path") {
    for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(nid(i), nid(i + 1));
  } else if (family == "cycle") {
    for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(nid(i), nid(i + 1));
    if (n > 2) edges.emplace_back(nid(n - 1), nid(0));
  } else if (family == "star") {
    for (std::size_t i = 1; i < n; ++i) edges.emplace_back(nid(0), nid(i));
  } else if (family == "binary_tree") {
    for (std::size_t i = 1; i < n; ++i) edges.emplace_back(nid(i), nid((i - 1) / 2));
  } else if (family == "grid") {
    const std::size_t rows = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
    const std::size_t cols = n / rows;
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        const std::size_t i = r * cols + c;
        if (c + 1 < cols) edges.emplace_back(nid(i), nid(i + 1));
        if (r + 1 < rows) edges.emplace_back(nid(i), nid(i + cols));
      }
    }
  } else if (family == "bipartite") {
    const std::size_t left = std::min<std::size_t>(10, n / 2);
    for (std::size_t i = 0; i < left; ++i)
      for (std::size_t j = left; j < n; ++j) edges.emplace_back(nid(i), nid(j));
  } else if (family == "random_tree") {
    for (std::size_t i = 1; i < n; ++i)
      edges.emplace_back(nid(i), nid(rng.below(i)));
  } else if (family == "gnm_sparse") {
    edges = random_edges(n, n, rng);
  } else if (family == "gnm_dense") {
    edges = random_edges(n, 3 * n, rng);
  } else if (family == "funnel") {
    const int fan_in = 11;
    const std::size_t hubs = n / (fan_in + 1);
    if (hubs == 0) throw DomainError("n too small for the funnel family");
    const std::size_t first_hub = hubs * fan_in;
    for (std::size_t leaf = 0; leaf < first_hub; ++leaf)
      edges.emplace_back(nid(leaf), nid(first_hub + leaf / fan_in));
    for (std::size_t j = 0; j + 1 < hubs; ++j)
      edges.emplace_back(nid(first_hub + j), nid(first_hub + j + 1));
  } else {
    throw DomainError("unknown graph family '" + family + "'");
  }
  return edges;
}

}  // namespace

const std::vector<std::string>& amortized_stress_families() {
  static const std::vector<std::string> families = {
      "path",        "cycle",      "star",      "binary_tree", "grid",
      "bipartite",   "random_tree", "gnm_sparse", "gnm_dense",  "funnel"};
  return families;
}

Workload make_gnm_sweep(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (n < 1) throw DomainError("n must be >= 1");
  SplitMix64 rng(seed);
  Workload w;
  w.n = n;
  for (const auto& [u, v] : random_edges(n, m, rng))
    w.events.push_back({WorkloadEvent::Kind::Insert, u, v});
  w.events.push_back({WorkloadEvent::Kind::SweepAll, 0, 0});
  return w;
}

Workload make_churn(std::size_t n, std::size_t ops, std::uint64_t seed) {
  if (n < 2) throw DomainError("churn needs n >= 2");
  SplitMix64 rng(seed);
  Workload w;
  w.n = n;
  std::vector<std::pair<NodeId, NodeId>> present;
  std::unordered_set<std::uint64_t> keys;
  const std::size_t max_edges = n * (n - 1) / 2;

  const auto try_insert = [&]() -> bool {
    if (present.size() == max_edges) return false;
    for (;;) {
      const NodeId u = static_cast<NodeId>(rng.below(n));
      const NodeId v = static_cast<NodeId>(rng.below(n));
      if (u == v) continue;
      if (!keys.insert(edge_key(u, v)).second) continue;
      present.emplace_back(u, v);
      w.events.push_back({WorkloadEvent::Kind::Insert, u, v});
      return true;
    }
  };
  const auto try_delete = [&]() -> bool {
    if (present.empty()) return false;
    const std::size_t i = rng.below(present.size());
    const auto [u, v] = present[i];
    present[i] = present.back();
    present.pop_back();
    keys.erase(edge_key(u, v));
    w.events.push_back({WorkloadEvent::Kind::Delete, u, v});
    return true;
  };

  for (std::size_t step = 0; step < ops; ++step) {
    const std::uint64_t r = rng.below(100);
    if (r < 40) {
      if (!try_insert()) try_delete();
    } else if (r < 65) {
      if (!try_delete()) try_insert();
    } else {
      w.events.push_back(
          {WorkloadEvent::Kind::Query, static_cast<NodeId>(rng.below(n)), 0});
    }
  }
  w.events.push_back({WorkloadEvent::Kind::SweepAll, 0, 0});
  return w;
}

Workload make_amortized_stress(std::size_t n, const std::string& family,
                               std::uint64_t seed) {
  SplitMix64 rng(seed);
  Workload w;
  w.n = n;
  for (const auto& [u, v] : family_edges(n, family, rng))
    w.events.push_back({WorkloadEvent::Kind::Insert, u, v});
  std::vector<NodeId> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<NodeId>(i);
  shuffle_ids(ids, rng);
  for (NodeId u : ids) w.events.push_back({WorkloadEvent::Kind::Query, u, 0});
  return w;
}

Workload make_vstar_stress(std::size_t n, int fan_in, std::uint64_t seed) {
  if (fan_in < 1) throw DomainError("fan_in must be >= 1");
  const std::size_t hubs = n / (static_cast<std::size_t>(fan_in) + 1);
  if (hubs == 0) throw DomainError("n too small for the given fan_in");
  SplitMix64 rng(seed);
  Workload w;
  w.n = n;
  const std::size_t first_hub = hubs * static_cast<std::size_t>(fan_in);

  // Seed permutes which hub owns each leaf block; the shape is fixed.
  std::vector<NodeId> hub_ids(hubs);
  for (std::size_t j = 0; j < hubs; ++j)
    hub_ids[j] = static_cast<NodeId>(first_hub + j);
  std::vector<NodeId> owner(hub_ids);
  shuffle_ids(owner, rng);

  for (std::size_t leaf = 0; leaf < first_hub; ++leaf)
    w.events.push_back({WorkloadEvent::Kind::Insert,
                        static_cast<NodeId>(leaf),
                        owner[leaf / static_cast<std::size_t>(fan_in)]});
  for (std::size_t j = 0; j + 1 < hubs; ++j)
    w.events.push_back(
        {WorkloadEvent::Kind::Insert, hub_ids[j], hub_ids[j + 1]});
  w.events.push_back({WorkloadEvent::Kind::SweepAll, 0, 0});
  return w;
}

}  // namespace dyncolor
