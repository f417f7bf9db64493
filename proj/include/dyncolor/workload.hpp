#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dyncolor/graph_store.hpp"

namespace dyncolor {

// One replayable event. Text form (one per line, '#' starts a comment):
//   n <count>   header, required first
//   + u v       insert edge {u,v}
//   - u v       delete edge {u,v}
//   ? u         query the color of u
//   ! all       query every node, then check the sweep for conflicts
struct WorkloadEvent {
  enum class Kind { Insert, Delete, Query, SweepAll };
  Kind kind = Kind::Query;
  NodeId u = 0;
  NodeId v = 0;
  friend bool operator==(const WorkloadEvent&, const WorkloadEvent&) = default;
};

struct Workload {
  std::size_t n = 0;
  std::vector<WorkloadEvent> events;
  friend bool operator==(const Workload&, const Workload&) = default;
};

// Throws ParseError (with the 1-based line number) on malformed input,
// unknown tokens, ids >= n, self-loops, or a missing/duplicate header.
Workload parse_workload(std::istream& in);
Workload parse_workload_file(const std::string& path);

std::string format_workload(const Workload& w);
void write_workload_file(const Workload& w, const std::string& path);

// Generators. All are deterministic functions of their parameters and seed.

// Build a uniform random graph with m distinct edges, then sweep all nodes.
Workload make_gnm_sweep(std::size_t n, std::size_t m, std::uint64_t seed);

// Interleaved inserts, deletes and queries (roughly 40/25/35), ending with a
// sweep.
Workload make_churn(std::size_t n, std::size_t ops, std::uint64_t seed);

// Fresh graph from a named family, then every node queried once in a
// seeded random order. Families: path, cycle, star, binary_tree, grid,
// bipartite, random_tree, gnm_sparse, gnm_dense, funnel.
Workload make_amortized_stress(std::size_t n, const std::string& family,
                               std::uint64_t seed);
const std::vector<std::string>& amortized_stress_families();

// Funnel graphs: hubs with fan_in pendant leaves each, hubs joined in a
// chain, leaves numbered before hubs. Ends with a sweep, so every hub sees
// its full fan of processed in-arcs before it is queried.
Workload make_vstar_stress(std::size_t n, int fan_in, std::uint64_t seed);

}  // namespace dyncolor
