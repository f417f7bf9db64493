#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dyncolor/implicit_color.hpp"
#include "dyncolor/orientation.hpp"
#include "dyncolor/workload.hpp"

namespace dyncolor {

struct RunConfig {
  PolicyKind policy = PolicyKind::Deterministic;
  OrientationKind orientation = OrientationKind::StaticRecompute;
  double cap_multiplier = 4.0;
  int rebuild_interval = 128;
  int partition_k = 1;
  std::uint64_t seed = 1;
  int threshold_mult = 6;
  int palette_mult = 9;
  // Per-event structural checks: out-degree vs cap after updates, palette
  // and processed-count bounds after queries. Test-scale cost (O(n) per
  // event); off by default for plain replays.
  bool check_invariants = false;
  bool collect_timings = false;
};

struct QueryRecord {
  NodeId node = 0;
  int color = 0;  // global color when partitioned
  int vstar_size = 0;
  std::uint64_t epoch = 0;
  friend bool operator==(const QueryRecord&, const QueryRecord&) = default;
};

struct EpochStats {
  std::uint64_t epoch = 0;
  std::size_t queried = 0;  // query events answered in this epoch
  std::size_t colored = 0;  // nodes added to the colored set
};

struct OpTimings {
  double insert_seconds = 0, delete_seconds = 0, query_seconds = 0;
  std::size_t inserts = 0, deletes = 0, queries = 0;
};

struct RunReport {
  std::vector<QueryRecord> records;
  std::size_t conflicts = 0;
  std::size_t invariant_violations = 0;  // total of the three below
  std::size_t cap_violations = 0;        // |out(v)| > d_cap after an update
  std::size_t palette_violations = 0;    // local color outside [1, 9d]
  std::size_t processed_violations = 0;  // uncolored node past 6d processed
  std::vector<std::string> violation_messages;  // first few, for diagnostics
  std::size_t updates = 0;
  int max_vstar = 0;
  double mean_vstar = 0.0;
  int p99_vstar = 0;
  std::size_t distinct_colors = 0;
  std::vector<EpochStats> epochs;
  OpTimings timings;
  std::string jsonl;  // one record object per query line, summary object last

  // 0: clean; 1: conflicts or invariant violations; 2: parse failure
  // (assigned by the CLI; a parsed Workload cannot produce 2 here).
  int exit_code() const {
    return (conflicts == 0 && invariant_violations == 0) ? 0 : 1;
  }
};

RunReport run_workload(const Workload& w, const RunConfig& config);

struct CoinExperimentResult {
  int d = 0;
  std::size_t trials = 0;
  std::vector<std::size_t> counts;      // trigger position histogram, 1-based positions
  std::vector<double> frequencies;
  std::vector<double> analytic;          // oracle::trigger_pmf_analytic
  double max_abs_deviation = 0.0;
};

// Replays the coin sequence a single uncolored node sees as threshold_mult*d
// of its in-arcs get processed, once per trial, and compares the empirical
// trigger-position distribution with the analytic one.
CoinExperimentResult coin_experiment(int d, std::size_t trials,
                                     std::uint64_t seed,
                                     int threshold_mult = 6);

}  // namespace dyncolor
