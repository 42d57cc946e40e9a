// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.
//
//   acceptance [out_dir] [--jobs N] [--seeds N]

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "aziza/classifier/pipeline.hpp"
#include "aziza/metrics/csv.hpp"
#include "aziza/routing/energy_policy.hpp"
#include "aziza/routing/trust.hpp"
#include "aziza/routing/zone_prob.hpp"
#include "aziza/runner/experiment.hpp"
#include "support/oracle_cases.hpp"

using namespace aziza;

namespace {

template <typename... Args>
std::string fmt(const char* f, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

struct Criterion {
  explicit Criterion(std::string n) : name(std::move(n)) {}

  std::string name;
  bool pass = true;
  std::vector<std::string> details;

  void check(bool ok, const std::string& what) {
    pass = pass && ok;
    details.push_back(std::string(ok ? "ok   " : "MISS ") + what);
  }
  void note(const std::string& what) { details.push_back("     " + what); }
};

bool near(double a, double b, double tol = 1e-9) { return std::fabs(a - b) <= tol; }

// ---------------------------------------------------------------------------

Criterion equation_oracles() {
  Criterion c("Equation oracles");
  c.check(near(transitive_gain(0.4, 0.8, 0.25), 0.52), fmt("Eq1 (0.4, 0.8) -> %.12f", transitive_gain(0.4, 0.8, 0.25)));
  c.check(near(transitive_gain(1.0, 0.37, 0.25), 1.0), "Eq1 cap at 1");
  c.check(near(transitive_gain(0.4, 0.0, 0.25), 0.4), "Eq1 zero peer leaves P unchanged");

  const TrustParams still{.lambda = 0.0};
  TrustTable t(still);
  t.reward(1, 0, 0.5);
  c.check(near(t.score(1, 0, 0.5), 0.6), "reward 0.5 -> 0.6");
  t.reward(2, 0, 0.95);
  c.check(near(t.score(2, 0, 0.95), 1.0), "reward 0.95 -> 1.0");
  t.penalize(3, 0, 0.2);
  c.check(near(t.score(3, 0, 0.2), 0.0), "penalty 0.2 -> 0.0");
  const double d = decay(0.8, 100.0, 0.01);
  c.check(near(d, 0.8 * std::exp(-1.0), 1e-12), fmt("decay(0.8, 100 s, 0.01) = %.12f", d));
  double worst = 0.0;
  for (double a : {0.5, 10.0, 77.0, 3600.0}) {
    for (double b : {0.25, 42.0, 900.0}) worst = std::max(worst, std::fabs(decay(decay(0.9, a, 0.01), b, 0.01) - decay(0.9, a + b, 0.01)));
  }
  c.check(worst <= 1e-12, fmt("decay composition, worst gap %.3g", worst));

  TrustTable b(still);
  c.check(b.blacklisted(10, 0, 0.25), "T=0.25 blacklisted");
  c.check(!b.blacklisted(11, 0, 0.3), "T=0.3 not blacklisted");
  int penalties = 0;
  while (!b.blacklisted(12, 0, 1.0) && penalties < 10) {
    b.penalize(12, 0, 1.0);
    ++penalties;
  }
  c.check(penalties == 3, fmt("T_init=1.0 blacklisted after %d penalties", penalties));

  FeatureVector f;
  f.p_i = 0.2;
  f.p_k = 0.9;
  f.trust = 0.8;
  f.buffer_free = 50.0 * 1024 * 1024;
  f.energy_max = 14'400.0;
  f.energy = 0.5 * f.energy_max;
  f.urgency = 0.5;
  c.check(decide_closed_form(f, {}, 150 * 1024) == Action::Forward, "decide example 1 -> forward");
  f.p_k = 0.05;
  f.urgency = 0.1;
  c.check(decide_closed_form(f, {}, 150 * 1024) == Action::Drop, "decide example 2 -> drop");
  f.urgency = 1.0;
  c.check(decide_closed_form(f, {}, 150 * 1024) == Action::Hold, "decide example 3 -> hold");
  const EnergyPolicy p;
  const double u = relay_utility(0.8, 0.6, 0.25, p);
  c.check(near(u, 0.38), fmt("U_k = %.12f", u));
  c.check(relay_eligible(u, 0.5, p) && !relay_eligible(u, 0.1, p), "Eq10 gate: eligible at U_m=0.5, not at 0.1");
  return c;
}

Criterion small_instance_oracle() {
  Criterion c("Small-instance oracle equivalence");
  for (Protocol p : all_protocols()) {
    const auto o = testing::run_oracle_case(testing::line_trace(), p);
    c.check(o.ok(), fmt("line trace, %s: %s", to_string(p), o.describe().c_str()));
  }
  for (Protocol p : {Protocol::Epidemic, Protocol::MaxProp}) {
    const auto o = testing::run_oracle_case(testing::five_node_trace(), p);
    c.check(o.ok(), fmt("five-node trace, %s: %s", to_string(p), o.describe().c_str()));
  }
  return c;
}

Criterion classifier() {
  Criterion c("Classifier pipeline");
  const PipelineOptions opts;
  const PipelineResult r = run_pipeline(opts);
  const GridResult& best = r.cv.best();
  const GridResult* target = nullptr;
  for (const GridResult& g : r.cv.grid) {
    if (g.params.max_depth == 5 && g.params.min_samples_leaf == 10) target = &g;
  }
  c.note(fmt("selected (%d, %d) mean accuracy %.4f", best.params.max_depth, best.params.min_samples_leaf, best.mean_accuracy));
  const bool is_target = best.params.max_depth == 5 && best.params.min_samples_leaf == 10;
  c.check(target && (is_target || std::fabs(best.mean_accuracy - target->mean_accuracy) <= 0.005),
          fmt("(5, 10) scores %.4f, within 0.5 points of the selection", target ? target->mean_accuracy : -1.0));
  c.check(best.mean_accuracy >= 0.90, fmt("mean 5-fold accuracy %.4f >= 0.90", best.mean_accuracy));
  std::string ranking;
  double least = 1.0;
  double delta_t = -1.0;
  for (const RankedFeature& f : r.ranking) {
    ranking += fmt(" %s=%.3f", f.name.c_str(), f.importance);
    least = std::min(least, f.importance);
    if (f.name == "delta_t") delta_t = f.importance;
  }
  c.note("importances:" + ranking);
  c.check(r.ranking.front().name == "p_k", "p_k ranks first (top is " + r.ranking.front().name + ")");
  c.check(delta_t == least, fmt("delta_t has the lowest importance (%.3f)", delta_t));
  return c;
}

// ---------------------------------------------------------------------------

using Key = std::tuple<std::string, int, double, std::string>;  // protocol, nodes, blackhole, ablation

struct Matrix {
  std::vector<RunSpec> specs;
  std::vector<RunOutput> outputs;
  std::vector<std::string> errors;

  std::vector<const RunOutput*> cell(const std::string& proto, int nodes, double frac, const std::string& ablation) const {
    std::vector<const RunOutput*> out;
    for (std::size_t i = 0; i < specs.size(); ++i) {
      const CellKey& k = specs[i].cell;
      if (k.protocol == proto && k.node_count == nodes && k.blackhole_frac == frac && k.ablation == ablation &&
          errors[i].empty()) {
        out.push_back(&outputs[i]);
      }
    }
    return out;
  }
  double mean(const std::string& proto, int nodes, double frac, const std::string& ablation,
              double RunMetrics::*field) const {
    const auto runs = cell(proto, nodes, frac, ablation);
    if (runs.empty()) return std::nan("");
    double s = 0;
    for (const RunOutput* r : runs) s += r->metrics.*field;
    return s / static_cast<double>(runs.size());
  }
};

void add_plan(std::vector<RunSpec>& specs, std::vector<Protocol> protocols, std::vector<int> nodes,
              std::vector<double> fracs, std::vector<std::string> ablations, int seeds) {
  ExperimentPlan p;
  p.protocols = std::move(protocols);
  p.node_counts = std::move(nodes);
  p.blackhole_fracs = std::move(fracs);
  p.ablations = std::move(ablations);
  for (int s = 1; s <= seeds; ++s) p.seeds.push_back(static_cast<std::uint64_t>(s));
  for (RunSpec& s : expand(p)) {
    const bool dup = std::any_of(specs.begin(), specs.end(), [&](const RunSpec& o) { return o.cell == s.cell && o.seed == s.seed; });
    if (!dup) specs.push_back(std::move(s));
  }
}

Matrix run_matrix(int seeds, unsigned jobs) {
  Matrix m;
  const auto A = Protocol::Aziza;
  const auto E = Protocol::Epidemic;
  add_plan(m.specs, all_protocols(), {60}, {0.0}, {"none"}, seeds);
  add_plan(m.specs, {A, E, Protocol::BubbleRap, Protocol::SprayAndWait}, {60}, {0.1}, {"none"}, seeds);
  add_plan(m.specs, {A}, {60}, {0.0, 0.1}, {"notrust", "noclassifier", "nouav", "nozones"}, seeds);
  add_plan(m.specs, {A, E}, {40, 80, 100}, {0.0}, {"none"}, seeds);

  m.outputs.resize(m.specs.size());
  m.errors.resize(m.specs.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> done{0};
  std::mutex io;
  const auto t0 = std::chrono::steady_clock::now();
  auto worker = [&] {
    for (std::size_t i = next++; i < m.specs.size(); i = next++) {
      try {
        m.outputs[i] = run_cell(m.specs[i]);
      } catch (const std::exception& e) {
        m.errors[i] = e.what();
      }
      const std::size_t n = ++done;
      if (n % 10 == 0 || n == m.specs.size()) {
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::lock_guard lock(io);
        std::fprintf(stderr, "  %zu/%zu runs (%.0f s)\n", n, m.specs.size(), s);
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned k = 0; k < std::max(1u, jobs); ++k) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return m;
}

Criterion determinism(const Matrix& m) {
  Criterion c("Determinism");
  for (Protocol p : all_protocols()) {
    RunSpec s;
    s.protocol = p;
    s.seed = 1;
    s.config.scenario.blackhole_frac = 0.1;
    s.cell = {to_string(p), 60, 0.1, "none"};
    s.event_log = true;
    const RunOutput a = run_cell(s);
    const RunOutput b = run_cell(s);
    const bool same = runs_csv({a.metrics}) == runs_csv({b.metrics}) && a.event_log == b.event_log;
    c.check(same, fmt("%s seed 1 at 10%% blackholes: rows and %zu-byte event logs identical", to_string(p), a.event_log.size()));
  }
  // The matrix ran on a thread pool; a single-threaded rerun must reproduce its rows.
  for (std::size_t i = 0; i < m.specs.size(); i += 37) {
    if (!m.errors[i].empty()) continue;
    const RunOutput again = run_cell(m.specs[i]);
    c.check(runs_csv({again.metrics}) == runs_csv({m.outputs[i].metrics}),
            fmt("matrix row %s seed %llu reproduced", run_stem(m.specs[i]).c_str(),
                static_cast<unsigned long long>(m.specs[i].seed)));
  }
  return c;
}

Criterion energy_closure(const Matrix& m) {
  Criterion c("Energy ledger closure");
  std::size_t nodes = 0, bad = 0, depleted = 0;
  std::string first;
  for (std::size_t i = 0; i < m.specs.size(); ++i) {
    if (!m.errors[i].empty()) continue;
    const double horizon = m.specs[i].config.scenario.horizon;
    for (const EnergySummary& e : m.outputs[i].energy) {
      ++nodes;
      const std::int64_t consumed = e.capacity_uj - e.residual_uj;
      const std::int64_t ledger = 250'000 * static_cast<std::int64_t>(e.tx_count) +
                                  150'000 * static_cast<std::int64_t>(e.rx_count) + e.idle_uj;
      // Alive nodes idle through every tick of the horizon.
      const bool idle_ok = e.residual_uj == 0 ? e.idle_uj <= std::llround(50'000 * horizon)
                                              : e.idle_uj == std::llround(50'000 * horizon);
      depleted += e.residual_uj == 0;
      if (consumed != ledger || !idle_ok || e.tx_cost_uj != 250'000 || e.rx_cost_uj != 150'000) {
        if (bad++ == 0) first = fmt("%s node %u", run_stem(m.specs[i]).c_str(), e.node);
      }
    }
  }
  c.check(bad == 0 && nodes > 0, fmt("%zu node ledgers over %zu runs, %zu mismatched%s", nodes, m.specs.size(), bad,
                                      bad ? (" (first: " + first + ")").c_str() : ""));
  c.note(fmt("%zu nodes ran their battery flat", depleted));
  return c;
}

Criterion orderings(const Matrix& m) {
  Criterion c("Statistical orderings");
  auto mean = [&](const char* p, double frac, double RunMetrics::*f) { return m.mean(p, 60, frac, "none", f); };
  const double or_e = mean("epidemic", 0, &RunMetrics::or_ratio);
  const double or_m = mean("maxprop", 0, &RunMetrics::or_ratio);
  const double or_a = mean("aziza", 0, &RunMetrics::or_ratio);
  const double or_s = mean("snw", 0, &RunMetrics::or_ratio);
  c.check(or_e > or_m && or_m > or_a && or_a > or_s,
          fmt("OR epidemic %.2f > maxprop %.2f > aziza %.2f > snw %.2f", or_e, or_m, or_a, or_s));

  const double sr_a = mean("aziza", 0.1, &RunMetrics::sr);
  const double sr_e = mean("epidemic", 0.1, &RunMetrics::sr);
  const double sr_b = mean("bubblerap", 0.1, &RunMetrics::sr);
  c.check(sr_a - sr_e >= 0.10 && sr_a - sr_b >= 0.10,
          fmt("SR at 10%% blackholes: aziza %.3f vs epidemic %.3f, bubblerap %.3f (needs +0.10)", sr_a, sr_e, sr_b));

  const double dr_a = mean("aziza", 0, &RunMetrics::dr);
  const double dr_e = mean("epidemic", 0, &RunMetrics::dr);
  c.check(dr_a >= dr_e, fmt("DR honest: aziza %.3f >= epidemic %.3f", dr_a, dr_e));

  const double hc_a = mean("aziza", 0, &RunMetrics::hc);
  const double hc_e = mean("epidemic", 0, &RunMetrics::hc);
  c.check(hc_a < hc_e, fmt("HC: aziza %.2f < epidemic %.2f", hc_a, hc_e));

  int worst = 0;
  std::size_t runs = 0;
  for (std::size_t i = 0; i < m.specs.size(); ++i) {
    if (m.specs[i].protocol != Protocol::SprayAndWait || !m.errors[i].empty()) continue;
    worst = std::max(worst, m.outputs[i].metrics.max_live_copies);
    ++runs;
  }
  c.check(runs > 0 && worst <= 4, fmt("Spray-and-Wait live copies <= 4 in all %zu runs (max %d)", runs, worst));

  for (const char* p : {"aziza", "epidemic", "prophet", "snw", "maxprop", "bubblerap"}) {
    c.note(fmt("%-9s DR %.3f  ADD %6.1f min  OR %6.2f  HC %.2f  SR@10%% %s", p, mean(p, 0, &RunMetrics::dr),
               mean(p, 0, &RunMetrics::add_seconds) / 60.0, mean(p, 0, &RunMetrics::or_ratio), mean(p, 0, &RunMetrics::hc),
               std::isnan(mean(p, 0.1, &RunMetrics::sr)) ? "  -  " : fmt("%.3f", mean(p, 0.1, &RunMetrics::sr)).c_str()));
  }
  return c;
}

Criterion ablations(const Matrix& m) {
  Criterion c("Ablation orderings");
  const double dr_full = m.mean("aziza", 60, 0.0, "none", &RunMetrics::dr);
  const double sr_full = m.mean("aziza", 60, 0.1, "none", &RunMetrics::sr);
  const double add_full = m.mean("aziza", 60, 0.0, "none", &RunMetrics::add_seconds);
  c.note(fmt("full       DR %.3f  SR@10%% %.3f  ADD %.1f min", dr_full, sr_full, add_full / 60));
  std::map<std::string, double> sr_drop, add_rise;
  for (const char* v : {"notrust", "noclassifier", "nouav", "nozones"}) {
    const double dr = m.mean("aziza", 60, 0.0, v, &RunMetrics::dr);
    const double sr = m.mean("aziza", 60, 0.1, v, &RunMetrics::sr);
    const double add = m.mean("aziza", 60, 0.0, v, &RunMetrics::add_seconds);
    sr_drop[v] = sr_full - sr;
    add_rise[v] = add - add_full;
    c.check(dr_full > dr, fmt("DR full %.3f > %s %.3f", dr_full, v, dr));
    c.note(fmt("%-12s SR@10%% %.3f (drop %+.3f)  ADD %.1f min (rise %+.1f)", v, sr, sr_drop[v], add / 60, add_rise[v] / 60));
  }
  auto top = [](const std::map<std::string, double>& xs) {
    return std::max_element(xs.begin(), xs.end(), [](auto& a, auto& b) { return a.second < b.second; })->first;
  };
  c.check(top(sr_drop) == "notrust", "largest SR drop is notrust (got " + top(sr_drop) + ")");
  c.check(top(add_rise) == "nouav", "largest ADD rise is nouav (got " + top(add_rise) + ")");
  return c;
}

Criterion scalability(const Matrix& m) {
  Criterion c("Scalability sweep");
  std::size_t failed = 0;
  for (std::size_t i = 0; i < m.specs.size(); ++i) failed += !m.errors[i].empty();
  c.check(failed == 0, fmt("%zu of %zu runs failed", failed, m.specs.size()));
  std::map<std::string, double> si;
  for (const char* p : {"aziza", "epidemic"}) {
    std::map<int, double> curve;
    std::string line;
    for (int n : kScalabilitySizes) {
      curve[n] = m.mean(p, n, 0.0, "none", &RunMetrics::dr);
      line += fmt(" %d:%.3f", n, curve[n]);
    }
    try {
      si[p] = scalability_index(curve);
    } catch (const MissingSize& e) {
      c.check(false, e.what());
      return c;
    }
    c.note(fmt("%-9s DR by size%s  SI %.3f", p, line.c_str(), si[p]));
  }
  c.check(si["aziza"] <= si["epidemic"], fmt("SI aziza %.3f <= epidemic %.3f", si["aziza"], si["epidemic"]));
  return c;
}

void report(const Criterion& c, int& failures) {
  std::printf("%s  %s\n", c.pass ? "PASS" : "FAIL", c.name.c_str());
  for (const std::string& d : c.details) std::printf("        %s\n", d.c_str());
  std::fflush(stdout);
  failures += !c.pass;
}

}  // namespace

int main(int argc, char** argv) {
  std::filesystem::path out = "acceptance_out";
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  int seeds = 10;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--jobs") && i + 1 < argc) {
      jobs = static_cast<unsigned>(std::atoi(argv[++i]));
    } else if (!std::strcmp(argv[i], "--seeds") && i + 1 < argc) {
      seeds = std::atoi(argv[++i]);
    } else {
      out = argv[i];
    }
  }

  int failures = 0;
  report(equation_oracles(), failures);
  report(small_instance_oracle(), failures);
  report(classifier(), failures);

  std::fprintf(stderr, "running experiment matrix (%d seeds, %u jobs)\n", seeds, jobs);
  const Matrix m = run_matrix(seeds, jobs);
  std::vector<RunMetrics> rows;
  for (std::size_t i = 0; i < m.specs.size(); ++i) {
    if (m.errors[i].empty()) rows.push_back(m.outputs[i].metrics);
    else std::fprintf(stderr, "  %s failed: %s\n", run_stem(m.specs[i]).c_str(), m.errors[i].c_str());
  }
  write_runs_csv(out / "runs.csv", rows);
  write_summary_csv(out / "summary.csv", aggregate(rows));

  report(determinism(m), failures);
  report(energy_closure(m), failures);
  report(orderings(m), failures);
  report(ablations(m), failures);
  report(scalability(m), failures);
  std::printf("%d of 8 criteria failed; matrix written to %s\n", failures, out.string().c_str());
  return failures ? 1 : 0;
}
