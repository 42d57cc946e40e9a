#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "aziza/metrics/metrics.hpp"
#include "aziza/routing/factory.hpp"
#include "aziza/runner/config_io.hpp"
#include "aziza/sim/world.hpp"

namespace aziza {

class UnknownVariant : public std::invalid_argument {
 public:
  explicit UnknownVariant(const std::string& name)
      : std::invalid_argument("unknown ablation variant '" + name + "'") {}
};

/// none, notrust, noclassifier, nouav, nozones.
const std::vector<std::string>& ablation_variants();
SimConfig apply_ablation(const SimConfig& config, const std::string& variant);

/// One fully resolved run.
struct RunSpec {
  SimConfig config;
  Protocol protocol = Protocol::Aziza;
  std::uint64_t seed = 1;
  CellKey cell;
  bool event_log = false;
  bool decision_trace = false;
};

struct RunOutput {
  RunMetrics metrics;
  RunStats stats;
  std::string event_log;
  std::string decision_trace;
  /// Closing energy ledger of every node.
  std::vector<EnergySummary> energy;
};

/// Builds the world, runs the engine to the horizon and computes the metrics.
RunOutput run_cell(const RunSpec& spec);

/// Stable file-name stem for a run's logs.
std::string run_stem(const RunSpec& spec);

struct ExperimentPlan {
  SimConfig base;
  std::vector<Protocol> protocols;
  std::vector<std::uint64_t> seeds;
  /// Ground node counts; empty keeps the base count.
  std::vector<int> node_counts;
  /// Empty keeps the base fraction.
  std::vector<double> blackhole_fracs;
  std::vector<std::string> ablations{"none"};
  std::filesystem::path out_dir;
  unsigned jobs = 1;
  bool event_log = false;
  bool decision_trace = false;
};

/// Cartesian product in a fixed order: ablation, blackhole fraction, node count, protocol, seed.
/// Throws UnknownVariant or InvalidConfig before anything runs.
std::vector<RunSpec> expand(const ExperimentPlan& plan);

struct CellFailure {
  std::string stem;
  std::string error;
};

struct PlanResult {
  std::vector<RunMetrics> runs;
  std::vector<CellFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// Runs every cell on `plan.jobs` threads, then writes runs.csv, summary.csv,
/// failures.json and (when requested) per-run logs under plan.out_dir.
PlanResult run_plan(const ExperimentPlan& plan);

/// Zones, POIs, node specs, start positions and timetables as JSON.
std::string world_json(const World& world);

}  // namespace aziza
