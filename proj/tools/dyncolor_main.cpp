#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "dyncolor/runner.hpp"

namespace {

using namespace dyncolor;

struct CommonFlags {
  std::string policy = "det";
  std::string orientation = "static";
  int partition_k = 1;
  std::uint64_t seed = 1;
  int threshold_mult = 6;
  int palette_mult = 9;
  double cap_multiplier = 4.0;
  int rebuild_interval = 128;
};

RunConfig to_config(const CommonFlags& f, bool check_invariants,
                    bool timings) {
  RunConfig cfg;
  cfg.policy = f.policy == "det" ? PolicyKind::Deterministic
                                 : PolicyKind::Randomized;
  cfg.orientation = f.orientation == "static"
                        ? OrientationKind::StaticRecompute
                        : OrientationKind::AmortizedFlip;
  cfg.partition_k = f.partition_k;
  cfg.seed = f.seed;
  cfg.threshold_mult = f.threshold_mult;
  cfg.palette_mult = f.palette_mult;
  cfg.cap_multiplier = f.cap_multiplier;
  cfg.rebuild_interval = f.rebuild_interval;
  cfg.check_invariants = check_invariants;
  cfg.collect_timings = timings;
  return cfg;
}

void add_common_flags(CLI::App& app, CommonFlags& f) {
  app.add_option("--policy", f.policy, "Recursion policy")
      ->check(CLI::IsMember({"det", "rand"}))
      ->capture_default_str();
  app.add_option("--orientation", f.orientation, "Orientation strategy")
      ->check(CLI::IsMember({"static", "amortized"}))
      ->capture_default_str();
  app.add_option("--partition", f.partition_k, "Vertex partition count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", f.seed, "Run seed")->capture_default_str();
  app.add_option("--threshold-mult", f.threshold_mult,
                 "Recursion threshold multiplier (threshold = mult * d)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--palette-mult", f.palette_mult,
                 "Palette multiplier (palette = mult * d)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--cap-multiplier", f.cap_multiplier,
                 "Amortized orientation cap multiplier")
      ->check(CLI::Range(2.0, 64.0))
      ->capture_default_str();
  app.add_option("--rebuild-interval", f.rebuild_interval,
                 "Amortized orientation rebuild interval (deletions)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

int cmd_run(const std::string& workload_path, const CommonFlags& flags,
            const std::string& out_path, bool check_invariants, bool timings) {
  Workload w;
  try {
    w = workload_path == "-" ? parse_workload(std::cin)
                             : parse_workload_file(workload_path);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  RunReport report;
  try {
    report = run_workload(w, to_config(flags, check_invariants, timings));
  } catch (const Error& e) {
    std::cerr << "run failed: " << e.what() << "\n";
    return 1;
  }

  if (out_path.empty() || out_path == "-") {
    std::cout << report.jsonl;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return 1;
    }
    out << report.jsonl;
  }

  std::cerr << "queries=" << report.records.size()
            << " updates=" << report.updates
            << " conflicts=" << report.conflicts
            << " invariant_violations=" << report.invariant_violations
            << " max_vstar=" << report.max_vstar
            << " distinct_colors=" << report.distinct_colors << "\n";
  for (const auto& msg : report.violation_messages)
    std::cerr << "violation: " << msg << "\n";
  if (timings) {
    const auto& t = report.timings;
    const auto per = [](double secs, std::size_t count) {
      return count == 0 ? 0.0 : secs / static_cast<double>(count) * 1e6;
    };
    std::cerr << "timing: insert " << per(t.insert_seconds, t.inserts)
              << " us/op (" << t.inserts << "), delete "
              << per(t.delete_seconds, t.deletes) << " us/op (" << t.deletes
              << "), query " << per(t.query_seconds, t.queries) << " us/op ("
              << t.queries << ")\n";
  }
  return report.exit_code();
}

int cmd_generate(const std::string& kind, std::size_t n, std::size_t m,
                 std::size_t ops, const std::string& family, int fan_in,
                 std::uint64_t seed, const std::string& out_path) {
  Workload w;
  try {
    if (kind == "gnm_sweep") {
      w = make_gnm_sweep(n, m, seed);
    } else if (kind == "churn") {
      w = make_churn(n, ops, seed);
    } else if (kind == "amortized_stress") {
      w = make_amortized_stress(n, family, seed);
    } else if (kind == "vstar_stress") {
      w = make_vstar_stress(n, fan_in, seed);
    } else {
      std::cerr << "unknown workload kind '" << kind << "'\n";
      return 2;
    }
  } catch (const Error& e) {
    std::cerr << "generate failed: " << e.what() << "\n";
    return 2;
  }
  if (out_path.empty() || out_path == "-") {
    std::cout << format_workload(w);
  } else {
    write_workload_file(w, out_path);
  }
  return 0;
}

int cmd_coin_experiment(int d, std::size_t trials, std::uint64_t seed,
                        int threshold_mult) {
  CoinExperimentResult res;
  try {
    res = coin_experiment(d, trials, seed, threshold_mult);
  } catch (const Error& e) {
    std::cerr << "coin experiment failed: " << e.what() << "\n";
    return 2;
  }
  nlohmann::json j{{"d", res.d},
                   {"trials", res.trials},
                   {"frequencies", res.frequencies},
                   {"analytic", res.analytic},
                   {"max_abs_deviation", res.max_abs_deviation}};
  std::cout << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dynamic low-outdegree orientation and implicit coloring harness"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string workload_path;
  std::string out_path;
  bool check_invariants = false;
  bool timings = false;

  auto* run = app.add_subcommand("run", "Replay a workload file");
  run->add_option("workload", workload_path, "Workload file ('-' for stdin)")
      ->required();
  add_common_flags(*run, flags);
  run->add_option("--out", out_path, "JSONL output path (default stdout)");
  run->add_flag("--check-invariants", check_invariants,
                "Per-event structural checks (test scale)");
  run->add_flag("--timings", timings, "Report per-op-class timing to stderr");

  std::string kind, family = "path";
  std::size_t n = 100, m = 200, ops = 1000, trials = 1000000;
  int fan_in = 11, d = 2;

  auto* gen = app.add_subcommand("generate", "Emit a workload file");
  gen->add_option("kind", kind,
                  "gnm_sweep | churn | amortized_stress | vstar_stress")
      ->required();
  gen->add_option("--n", n, "Node count")->capture_default_str();
  gen->add_option("--m", m, "Edge count (gnm_sweep)")->capture_default_str();
  gen->add_option("--ops", ops, "Operation count (churn)")->capture_default_str();
  gen->add_option("--family", family, "Graph family (amortized_stress)")
      ->capture_default_str();
  gen->add_option("--fan-in", fan_in, "Leaves per hub (vstar_stress)")
      ->capture_default_str();
  gen->add_option("--seed", flags.seed, "Generator seed")->capture_default_str();
  gen->add_option("--out", out_path, "Output path (default stdout)");

  auto* coin = app.add_subcommand(
      "coin-experiment", "Empirical trigger-position distribution vs analytic");
  coin->add_option("--d", d, "Out-degree cap")->check(CLI::Range(2, 64))
      ->capture_default_str();
  coin->add_option("--trials", trials, "Trial count")->capture_default_str();
  coin->add_option("--seed", flags.seed, "Seed")->capture_default_str();
  coin->add_option("--threshold-mult", flags.threshold_mult,
                   "Threshold multiplier")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  if (run->parsed())
    return cmd_run(workload_path, flags, out_path, check_invariants, timings);
  if (gen->parsed())
    return cmd_generate(kind, n, m, ops, family, fan_in, flags.seed, out_path);
  return cmd_coin_experiment(d, trials, flags.seed, flags.threshold_mult);
}
