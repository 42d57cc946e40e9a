#include "aziza/metrics/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace aziza {

RunMetrics compute_run_metrics(const EventLog& log) {
  RunMetrics m;
  std::unordered_map<MessageId, double> created_at;
  std::unordered_map<MessageId, char> seen;
  std::vector<double> delays;
  double hops = 0.0;
  for (const Event& e : log.events()) {
    switch (e.kind) {
      case EventKind::MessageCreated:
        created_at.emplace(e.msg, e.time);
        ++m.created;
        break;
      case EventKind::TransferComplete:
        ++m.relayed;
        break;
      case EventKind::MessageDelivered: {
        if (!seen.emplace(e.msg, 1).second) break;
        ++m.delivered;
        auto it = created_at.find(e.msg);
        if (it != created_at.end()) delays.push_back(e.time - it->second);
        hops += static_cast<double>(e.value);
        break;
      }
      default:
        break;
    }
  }
  std::int64_t consumed_uj = 0;
  for (const EnergySummary& s : log.energy()) consumed_uj += s.capacity_uj - s.residual_uj;
  m.total_energy_j = static_cast<double>(consumed_uj) * 1e-6;

  m.empty_run = m.created == 0;
  if (m.empty_run) return m;
  m.dr = static_cast<double>(m.delivered) / static_cast<double>(m.created);
  m.sr = m.dr;
  if (m.delivered > 0) {
    const double n = static_cast<double>(m.delivered);
    m.or_ratio = static_cast<double>(m.relayed) / n - 1.0;
    m.hc = hops / n;
    double sum = 0.0;
    for (double d : delays) sum += d;
    if (!delays.empty()) {
      m.add_seconds = sum / static_cast<double>(delays.size());
      std::sort(delays.begin(), delays.end());
      const std::size_t k = delays.size();
      m.add_median_seconds = k % 2 ? delays[k / 2] : 0.5 * (delays[k / 2 - 1] + delays[k / 2]);
    }
  }
  if (m.total_energy_j > 0.0) m.ee = static_cast<double>(m.delivered) / m.total_energy_j;
  return m;
}

void attach_stats(RunMetrics& m, const RunStats& stats) {
  m.contacts = stats.contacts;
  m.aborted = stats.aborted;
  m.max_live_copies = stats.max_live_copies;
}

const std::vector<std::string>& summary_metric_names() {
  static const std::vector<std::string> names{"created", "delivered", "relayed", "dr",  "add_seconds",
                                              "add_median_seconds", "or_ratio", "hc", "total_energy_j",
                                              "ee", "sr", "max_live_copies"};
  return names;
}

double metric_value(const RunMetrics& m, const std::string& name) {
  if (name == "created") return static_cast<double>(m.created);
  if (name == "delivered") return static_cast<double>(m.delivered);
  if (name == "relayed") return static_cast<double>(m.relayed);
  if (name == "dr") return m.dr;
  if (name == "add_seconds") return m.add_seconds;
  if (name == "add_median_seconds") return m.add_median_seconds;
  if (name == "or_ratio") return m.or_ratio;
  if (name == "hc") return m.hc;
  if (name == "total_energy_j") return m.total_energy_j;
  if (name == "ee") return m.ee;
  if (name == "sr") return m.sr;
  if (name == "max_live_copies") return m.max_live_copies;
  throw std::invalid_argument("unknown metric " + name);
}

MeanStd mean_std(const std::vector<double>& xs) {
  MeanStd r;
  // Welford: identical samples give exactly zero spread.
  double m2 = 0.0;
  std::size_t n = 0;
  for (double x : xs) {
    ++n;
    const double d = x - r.mean;
    r.mean += d / static_cast<double>(n);
    m2 += d * (x - r.mean);
  }
  if (n >= 2) r.std = std::sqrt(m2 / static_cast<double>(n - 1));
  return r;
}

std::vector<CellSummary> aggregate(const std::vector<RunMetrics>& runs) {
  std::map<CellKey, std::vector<const RunMetrics*>> cells;
  for (const RunMetrics& r : runs) cells[r.cell].push_back(&r);
  std::vector<CellSummary> out;
  for (const auto& [key, members] : cells) {
    CellSummary s;
    s.cell = key;
    s.runs = members.size();
    for (const std::string& name : summary_metric_names()) {
      std::vector<double> xs;
      for (const RunMetrics* r : members) xs.push_back(metric_value(*r, name));
      s.values[name] = mean_std(xs);
    }
    out.push_back(std::move(s));
  }
  return out;
}

double scalability_index(const std::map<int, double>& dr_by_size) {
  for (int size : kScalabilitySizes) {
    if (!dr_by_size.count(size)) throw MissingSize(size);
  }
  const double d40 = dr_by_size.at(40);
  if (d40 == 0.0) return 0.0;
  return (d40 - dr_by_size.at(100)) / d40;
}

}  // namespace aziza
