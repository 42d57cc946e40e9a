#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "aziza/sim/engine.hpp"
#include "aziza/sim/event_log.hpp"

namespace aziza {

/// Identifies the experiment cell a run belongs to (everything but the seed).
struct CellKey {
  std::string protocol;
  int node_count = 0;
  double blackhole_frac = 0.0;
  std::string ablation = "none";

  auto operator<=>(const CellKey&) const = default;
};

struct RunMetrics {
  CellKey cell;
  std::uint64_t seed = 0;
  std::string config_hash;

  std::uint64_t created = 0;
  std::uint64_t delivered = 0;
  std::uint64_t relayed = 0;
  double dr = 0.0;
  double add_seconds = 0.0;
  double add_median_seconds = 0.0;
  double or_ratio = 0.0;
  double hc = 0.0;
  double total_energy_j = 0.0;
  double ee = 0.0;
  double sr = 0.0;
  /// Nothing was created; every ratio is reported as 0.
  bool empty_run = false;

  std::uint64_t contacts = 0;
  std::uint64_t aborted = 0;
  int max_live_copies = 0;

  bool operator==(const RunMetrics&) const = default;
};

/// Derives the log-based metrics. Cell, seed and engine counters are left for the caller.
RunMetrics compute_run_metrics(const EventLog& log);
void attach_stats(RunMetrics& m, const RunStats& stats);

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;
};

/// Metrics aggregated over every seed of one cell.
struct CellSummary {
  CellKey cell;
  std::size_t runs = 0;
  std::map<std::string, MeanStd> values;
};

/// Names of the per-run metrics that summaries aggregate, in column order.
const std::vector<std::string>& summary_metric_names();
double metric_value(const RunMetrics& m, const std::string& name);

MeanStd mean_std(const std::vector<double>& xs);
/// Sample mean and standard deviation per cell, cells in key order.
std::vector<CellSummary> aggregate(const std::vector<RunMetrics>& runs);

class MissingSize : public std::runtime_error {
 public:
  explicit MissingSize(int size)
      : std::runtime_error("no delivery ratio for " + std::to_string(size) + " nodes"), size_(size) {}
  int size() const { return size_; }

 private:
  int size_;
};

inline constexpr int kScalabilitySizes[] = {40, 60, 80, 100};

/// (DR_40 - DR_100) / DR_40; 0 when DR_40 is 0.
double scalability_index(const std::map<int, double>& dr_by_size);

}  // namespace aziza
