#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "aziza/classifier/model_io.hpp"
#include "aziza/classifier/pipeline.hpp"
#include "aziza/core/errors.hpp"
#include "aziza/core/files.hpp"
#include "aziza/metrics/csv.hpp"
#include "aziza/runner/experiment.hpp"
#include "aziza/scenario/world_builder.hpp"

using namespace aziza;

namespace {

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

/// "1..10", "3" or "1,4,7".
std::vector<std::uint64_t> parse_seeds(const std::string& s) {
  std::vector<std::uint64_t> out;
  for (const std::string& part : split(s)) {
    const auto dots = part.find("..");
    if (dots == std::string::npos) {
      out.push_back(std::stoull(part));
      continue;
    }
    const std::uint64_t lo = std::stoull(part.substr(0, dots));
    const std::uint64_t hi = std::stoull(part.substr(dots + 2));
    if (hi < lo) throw std::invalid_argument("empty seed range " + part);
    for (std::uint64_t v = lo; v <= hi; ++v) out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("no seeds given");
  return out;
}

std::vector<Protocol> parse_protocols(const std::string& s) {
  if (s == "all") return all_protocols();
  std::vector<Protocol> out;
  for (const std::string& name : split(s)) {
    auto p = parse_protocol(name);
    if (!p) throw std::invalid_argument("unknown protocol " + name);
    out.push_back(*p);
  }
  return out;
}

int simulate(const std::string& config_path, const std::string& protocols, const std::string& seeds,
             const std::string& nodes, const std::string& fracs, const std::string& ablations, unsigned jobs,
             double horizon, bool event_log, bool decision_trace, const std::string& dump_world,
             const std::string& out_dir) {
  ExperimentPlan plan;
  try {
    plan.base = config_path.empty() ? SimConfig{} : load_sim_config(config_path);
    if (horizon > 0) plan.base.scenario.horizon = horizon;
    plan.protocols = parse_protocols(protocols);
    plan.seeds = parse_seeds(seeds);
    for (const std::string& n : split(nodes)) plan.node_counts.push_back(std::stoi(n));
    for (const std::string& f : split(fracs)) plan.blackhole_fracs.push_back(std::stod(f));
    plan.ablations = ablations == "all" ? ablation_variants() : split(ablations);
    plan.out_dir = out_dir;
    plan.jobs = jobs ? jobs : std::max(1u, std::thread::hardware_concurrency());
    plan.event_log = event_log;
    plan.decision_trace = decision_trace;
    const std::vector<RunSpec> specs = expand(plan);
    if (!dump_world.empty()) {
      const RunSpec& first = specs.front();
      write_file_atomic(dump_world, world_json(build_world(first.config.scenario, first.seed)));
    }
    std::fprintf(stderr, "%zu runs on %u threads\n", specs.size(), plan.jobs);
  } catch (const InvalidConfig& e) {
    std::fprintf(stderr, "invalid config: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  const PlanResult result = run_plan(plan);
  for (const CellFailure& f : result.failures) std::fprintf(stderr, "failed %s: %s\n", f.stem.c_str(), f.error.c_str());
  std::fprintf(stderr, "%zu runs written to %s\n", result.runs.size(), (plan.out_dir / "runs.csv").c_str());
  return result.ok() ? 0 : 1;
}

int train(const PipelineOptions& options, const std::string& out, const std::string& report) {
  const PipelineResult r = run_pipeline(options);
  export_model(r.model, out);
  if (!report.empty()) write_file_atomic(report, pipeline_report_json(options, r));
  const GridResult& best = r.cv.best();
  std::printf("selected max_depth=%d min_samples_leaf=%d mean accuracy %.4f\n", best.params.max_depth,
              best.params.min_samples_leaf, best.mean_accuracy);
  for (const RankedFeature& f : r.ranking) std::printf("  %-12s %.4f\n", f.name.c_str(), f.importance);
  return 0;
}

int report(const std::string& in_dir) {
  const std::filesystem::path dir = in_dir;
  const auto runs = read_runs_csv(dir / "runs.csv");
  write_summary_csv(dir / "summary.csv", aggregate(runs));
  std::printf("%zu runs summarized into %s\n", runs.size(), (dir / "summary.csv").c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flood-scenario DTN simulator and routing experiments"};
  app.require_subcommand(1);

  auto* sim = app.add_subcommand("simulate", "Run an experiment matrix and write runs.csv / summary.csv");
  std::string config_path, protocols = "aziza", seeds = "1", nodes, fracs, ablations = "none", out_dir,
                           dump_world;
  unsigned jobs = 0;
  double horizon = 0;
  bool event_log = false, decision_trace = false;
  sim->add_option("--config", config_path, "JSON scenario/routing configuration")->check(CLI::ExistingFile);
  sim->add_option("--protocol", protocols, "Comma list of aziza,epidemic,prophet,snw,maxprop,bubblerap or 'all'");
  sim->add_option("--seeds", seeds, "Seed list, e.g. 1..10 or 1,2,5");
  sim->add_option("--nodes", nodes, "Ground node counts, e.g. 40,60,80,100");
  sim->add_option("--blackhole-frac", fracs, "Malicious ground fractions, e.g. 0,0.1");
  sim->add_option("--ablation", ablations, "Comma list of none,notrust,noclassifier,nouav,nozones or 'all'");
  sim->add_option("--jobs", jobs, "Concurrent runs (default: hardware threads)");
  sim->add_option("--horizon", horizon, "Override the simulated horizon in seconds");
  sim->add_flag("--event-log", event_log, "Write per-run JSON-lines event logs");
  sim->add_flag("--decision-trace", decision_trace, "Write per-run routing decision traces (aziza)");
  sim->add_option("--dump-world", dump_world, "Write the first run's generated world as JSON");
  sim->add_option("--out", out_dir, "Output directory")->required();

  auto* tc = app.add_subcommand("train-classifier", "Train the forwarding decision tree on synthetic contacts");
  PipelineOptions popts;
  std::string model_out, report_out;
  tc->add_option("--n", popts.n, "Synthetic rows");
  tc->add_option("--seed", popts.seed, "Dataset and fold seed");
  tc->add_option("--folds", popts.folds, "Cross-validation folds");
  tc->add_option("--out", model_out, "Model file")->required();
  tc->add_option("--report", report_out, "JSON report with fold accuracies and importances");

  auto* rep = app.add_subcommand("report", "Regenerate summary.csv from runs.csv");
  std::string in_dir;
  rep->add_option("--in", in_dir, "Directory holding runs.csv")->required();

  CLI11_PARSE(app, argc, argv);
  try {
    if (*sim) {
      return simulate(config_path, protocols, seeds, nodes, fracs, ablations, jobs, horizon, event_log,
                      decision_trace, dump_world, out_dir);
    }
    if (*tc) return train(popts, model_out, report_out);
    if (*rep) return report(in_dir);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
