#include "dyncolor/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>

#include "json.hpp"

#include "dyncolor/oracle.hpp"
#include "dyncolor/partition.hpp"
#include "dyncolor/rng.hpp"

namespace dyncolor {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

class InvariantSink {
 public:
  explicit InvariantSink(RunReport& report) : report_(report) {}
  void fail(std::size_t& category, const std::string& message) {
    ++category;
    ++report_.invariant_violations;
    if (report_.violation_messages.size() < 8)
      report_.violation_messages.push_back(message);
  }
  RunReport& report() { return report_; }

 private:
  RunReport& report_;
};

void check_update_invariants(const PartitionedColorer& pc, InvariantSink& sink) {
  const auto check_graph = [&](const OrientedGraph& g, const std::string& tag) {
    if (g.max_out_degree() > g.d_cap())
      sink.fail(sink.report().cap_violations,
                tag + ": out-degree " + std::to_string(g.max_out_degree()) +
                    " exceeds cap " + std::to_string(g.d_cap()));
  };
  check_graph(pc.global_graph(), "global");
  for (int p = 0; p < pc.part_count(); ++p)
    check_graph(pc.part_graph(p), "part " + std::to_string(p));
}

void check_query_invariants(const PartitionedColorer& pc, int part,
                            const QueryReport& local, InvariantSink& sink) {
  const ImplicitColorer& colorer = pc.part_colorer(part);
  const OrientedGraph& g = pc.part_graph(part);
  const int palette = colorer.palette_mult() * colorer.epoch_d();
  if (local.color < 1 || local.color > palette)
    sink.fail(sink.report().palette_violations,
              "node " + std::to_string(local.node) + ": local color " +
                  std::to_string(local.color) + " outside [1, " +
                  std::to_string(palette) + "]");
  const int threshold = colorer.threshold_mult() * colorer.epoch_d();
  for (NodeId w = 0; w < g.node_count(); ++w) {
    if (colorer.is_colored(w)) continue;
    if (colorer.processed_count(w) > threshold) {
      sink.fail(sink.report().processed_violations,
                "node " + std::to_string(w) + ": processed count " +
                    std::to_string(colorer.processed_count(w)) + " exceeds " +
                    std::to_string(threshold));
      break;
    }
  }
}

}  // namespace

RunReport run_workload(const Workload& w, const RunConfig& config) {
  RunReport report;
  InvariantSink sink(report);

  OrientationStrategy strategy{config.orientation, config.cap_multiplier,
                               config.rebuild_interval};
  PartitionedColorer pc(w.n, config.partition_k, config.seed, strategy,
                        config.policy, config.threshold_mult,
                        config.palette_mult);

  std::string jsonl;
  std::vector<EpochStats> epochs;
  const auto epoch_slot = [&](std::uint64_t epoch) -> EpochStats& {
    if (epochs.empty() || epochs.back().epoch != epoch)
      epochs.push_back({epoch, 0, 0});
    return epochs.back();
  };

  std::vector<int> vstar_sizes;
  std::set<int> colors_used;

  const auto timed = [&](double& bucket, auto&& fn) {
    if (!config.collect_timings) {
      fn();
      return;
    }
    const auto start = Clock::now();
    fn();
    bucket += std::chrono::duration<double>(Clock::now() - start).count();
  };

  const auto run_query = [&](NodeId u) -> QueryRecord {
    PartitionedColorer::GlobalQuery q{};
    timed(report.timings.query_seconds,
          [&] { q = pc.query_color_global(u); });
    ++report.timings.queries;
    if (config.check_invariants)
      check_query_invariants(pc, q.part, q.report, sink);
    QueryRecord rec{u, q.global_color, q.report.vstar_size,
                    pc.global_graph().epoch()};
    auto& slot = epoch_slot(rec.epoch);
    ++slot.queried;
    slot.colored += static_cast<std::size_t>(q.report.vstar_size);
    vstar_sizes.push_back(rec.vstar_size);
    colors_used.insert(rec.color);
    report.records.push_back(rec);
    json j{{"type", "query"},
           {"node", rec.node},
           {"color", rec.color},
           {"vstar", rec.vstar_size},
           {"epoch", rec.epoch}};
    jsonl += j.dump();
    jsonl += '\n';
    return rec;
  };

  for (const auto& event : w.events) {
    switch (event.kind) {
      case WorkloadEvent::Kind::Insert:
        timed(report.timings.insert_seconds,
              [&] { pc.insert_edge(event.u, event.v); });
        ++report.timings.inserts;
        ++report.updates;
        if (config.check_invariants) check_update_invariants(pc, sink);
        break;
      case WorkloadEvent::Kind::Delete:
        timed(report.timings.delete_seconds,
              [&] { pc.delete_edge(event.u, event.v); });
        ++report.timings.deletes;
        ++report.updates;
        if (config.check_invariants) check_update_invariants(pc, sink);
        break;
      case WorkloadEvent::Kind::Query:
        run_query(event.u);
        break;
      case WorkloadEvent::Kind::SweepAll: {
        std::vector<int> colors(w.n, 0);
        int max_color = 0;
        for (NodeId u = 0; u < w.n; ++u) {
          colors[u] = run_query(u).color;
          max_color = std::max(max_color, colors[u]);
        }
        const auto conflicts =
            oracle::verify_proper(pc.global_graph().undirected_edges(), colors);
        report.conflicts += conflicts.size();
        json j{{"type", "sweep"},
               {"swept", w.n},
               {"conflicts", conflicts.size()},
               {"max_color", max_color}};
        jsonl += j.dump();
        jsonl += '\n';
        break;
      }
    }
  }

  report.epochs = std::move(epochs);
  if (!vstar_sizes.empty()) {
    double sum = 0;
    for (int s : vstar_sizes) {
      sum += s;
      report.max_vstar = std::max(report.max_vstar, s);
    }
    report.mean_vstar = sum / static_cast<double>(vstar_sizes.size());
    std::vector<int> sorted = vstar_sizes;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t rank = (sorted.size() * 99 + 99) / 100;  // nearest-rank
    report.p99_vstar = sorted[std::min(sorted.size() - 1, rank - 1)];
  }
  report.distinct_colors = colors_used.size();

  json epochs_json = json::array();
  for (const auto& e : report.epochs)
    epochs_json.push_back(
        {{"epoch", e.epoch}, {"queried", e.queried}, {"colored", e.colored}});
  json summary{{"type", "summary"},
               {"queries", report.records.size()},
               {"updates", report.updates},
               {"conflicts", report.conflicts},
               {"invariant_violations", report.invariant_violations},
               {"max_vstar", report.max_vstar},
               {"mean_vstar", report.mean_vstar},
               {"p99_vstar", report.p99_vstar},
               {"distinct_colors", report.distinct_colors},
               {"epochs", epochs_json}};
  jsonl += summary.dump();
  jsonl += '\n';
  report.jsonl = std::move(jsonl);
  return report;
}

CoinExperimentResult coin_experiment(int d, std::size_t trials,
                                     std::uint64_t seed, int threshold_mult) {
  if (d < 2) throw DomainError("d must be at least 2");
  if (trials < 1) throw DomainError("trials must be positive");
  CoinExperimentResult res;
  res.d = d;
  res.trials = trials;
  const int limit = threshold_mult * d;
  res.counts.assign(limit, 0);

  RecursionPolicy policy = RecursionPolicy::randomized(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    for (int j = 1; j <= limit; ++j) {
      if (policy.should_recurse(j, d, threshold_mult)) {
        ++res.counts[j - 1];
        break;
      }
    }
  }

  res.analytic = oracle::trigger_pmf_analytic(d, threshold_mult);
  res.frequencies.resize(limit);
  for (int j = 0; j < limit; ++j) {
    res.frequencies[j] =
        static_cast<double>(res.counts[j]) / static_cast<double>(trials);
    res.max_abs_deviation = std::max(
        res.max_abs_deviation, std::abs(res.frequencies[j] - res.analytic[j]));
  }
  return res;
}

}  // namespace dyncolor
