#include "aziza/runner/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <mutex>
#include <sstream>
#include <thread>

#include "aziza/core/errors.hpp"
#include "aziza/core/files.hpp"
#include "aziza/metrics/csv.hpp"
#include "aziza/routing/aziza_router.hpp"
#include "aziza/scenario/world_builder.hpp"
#include "aziza/sim/engine.hpp"
#include "json.hpp"

namespace aziza {

const std::vector<std::string>& ablation_variants() {
  static const std::vector<std::string> v{"none", "notrust", "noclassifier", "nouav", "nozones"};
  return v;
}

SimConfig apply_ablation(const SimConfig& config, const std::string& variant) {
  SimConfig c = config;
  if (variant == "none") return c;
  if (variant == "notrust") {
    c.routing.trust_enabled = false;
  } else if (variant == "noclassifier") {
    c.routing.model = "predictability_gate";
  } else if (variant == "nouav") {
    c.scenario.uavs.count = 0;
  } else if (variant == "nozones") {
    c.scenario.single_routing_zone = true;
  } else {
    throw UnknownVariant(variant);
  }
  return c;
}

std::string run_stem(const RunSpec& spec) {
  char frac[32];
  std::snprintf(frac, sizeof frac, "%g", spec.cell.blackhole_frac);
  return spec.cell.protocol + "_" + spec.cell.ablation + "_n" + std::to_string(spec.cell.node_count) + "_bh" +
         frac + "_s" + std::to_string(spec.seed);
}

RunOutput run_cell(const RunSpec& spec) {
  World world = build_world(spec.config.scenario, spec.seed);
  const bool trace = spec.decision_trace && spec.protocol == Protocol::Aziza;
  RoutingConfig routing = spec.config.routing;
  // Only AZIZA consults the decision model.
  if (spec.protocol != Protocol::Aziza) routing.model = "closed_form";
  auto router = make_router(spec.protocol, router_options(routing, trace));
  Engine engine(world, *router);
  engine.run();

  RunOutput out;
  out.stats = engine.stats();
  out.metrics = compute_run_metrics(engine.log());
  attach_stats(out.metrics, out.stats);
  out.metrics.cell = spec.cell;
  out.metrics.seed = spec.seed;
  out.metrics.config_hash = fnv1a_hex(std::string(to_string(spec.protocol)) + "\n" + sim_config_json(spec.config));
  out.energy = engine.log().energy();
  if (spec.event_log) out.event_log = engine.log().to_jsonl();
  if (trace) {
    std::ostringstream ss;
    static_cast<const AzizaRouter&>(*router).write_decisions(ss);
    out.decision_trace = ss.str();
  }
  return out;
}

std::vector<RunSpec> expand(const ExperimentPlan& plan) {
  for (const std::string& a : plan.ablations) {
    if (std::find(ablation_variants().begin(), ablation_variants().end(), a) == ablation_variants().end()) {
      throw UnknownVariant(a);
    }
  }
  const std::vector<int> nodes = plan.node_counts.empty() ? std::vector<int>{plan.base.scenario.ground_count}
                                                          : plan.node_counts;
  const std::vector<double> fracs = plan.blackhole_fracs.empty()
                                        ? std::vector<double>{plan.base.scenario.blackhole_frac}
                                        : plan.blackhole_fracs;
  std::vector<RunSpec> specs;
  for (const std::string& ablation : plan.ablations) {
    for (double frac : fracs) {
      for (int n : nodes) {
        SimConfig c = plan.base;
        c.scenario.ground_count = n;
        c.scenario.blackhole_frac = frac;
        c = apply_ablation(c, ablation);
        validate(c.scenario);
        for (Protocol p : plan.protocols) {
          for (std::uint64_t seed : plan.seeds) {
            RunSpec s;
            s.config = c;
            s.protocol = p;
            s.seed = seed;
            s.cell = CellKey{to_string(p), n, frac, ablation};
            s.event_log = plan.event_log;
            s.decision_trace = plan.decision_trace;
            specs.push_back(std::move(s));
          }
        }
      }
    }
  }
  return specs;
}

PlanResult run_plan(const ExperimentPlan& plan) {
  const std::vector<RunSpec> specs = expand(plan);
  std::vector<std::optional<RunMetrics>> rows(specs.size());
  std::vector<std::string> errors(specs.size());
  const std::filesystem::path logs = plan.out_dir / "logs";

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++) {
      try {
        RunOutput out = run_cell(specs[i]);
        const std::string stem = run_stem(specs[i]);
        if (specs[i].event_log) write_file_atomic(logs / (stem + ".events.jsonl"), out.event_log);
        if (specs[i].decision_trace && specs[i].protocol == Protocol::Aziza) {
          write_file_atomic(logs / (stem + ".decisions.jsonl"), out.decision_trace);
        }
        rows[i] = std::move(out.metrics);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      } catch (...) {
        errors[i] = "unknown failure";
      }
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(plan.jobs, static_cast<unsigned>(specs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  PlanResult result;
  nlohmann::ordered_json manifest = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < specs.size(); ++i) {
    if (rows[i]) {
      result.runs.push_back(std::move(*rows[i]));
    } else {
      result.failures.push_back({run_stem(specs[i]), errors[i]});
      manifest.push_back({{"run", run_stem(specs[i])}, {"error", errors[i]}});
    }
  }
  write_runs_csv(plan.out_dir / "runs.csv", result.runs);
  write_summary_csv(plan.out_dir / "summary.csv", aggregate(result.runs));
  write_file_atomic(plan.out_dir / "failures.json", manifest.dump(2) + "\n");
  return result;
}

std::string world_json(const World& world) {
  using nlohmann::ordered_json;
  auto pt = [](Vec2 p) { return ordered_json::array({p.x, p.y}); };
  auto zones_json = [&](const ZoneMap& zones) {
    ordered_json a = ordered_json::array();
    for (const ZoneConfig& z : zones.zones()) {
      ordered_json pois = ordered_json::array();
      for (Vec2 p : z.pois) pois.push_back(pt(p));
      a.push_back({{"name", z.name},
                   {"bounds", {z.bounds.x0, z.bounds.y0, z.bounds.x1, z.bounds.y1}},
                   {"pois", pois}});
    }
    return a;
  };
  ordered_json j;
  j["seed"] = world.seed;
  j["regions"] = zones_json(world.regions);
  j["routing_zones"] = zones_json(world.routing_zones);
  ordered_json nodes = ordered_json::array();
  for (const NodeState& n : world.nodes) {
    ordered_json o;
    o["id"] = n.spec.id;
    o["class"] = to_string(n.spec.cls);
    o["home_region"] = n.spec.home_region == kNoZone ? ordered_json(nullptr)
                                                     : ordered_json(world.regions.zone(n.spec.home_region).name);
    o["radio_range"] = n.spec.radio_range;
    o["energy_capacity"] = n.spec.energy_capacity;
    o["initial_trust"] = n.spec.initial_trust;
    o["malicious"] = n.spec.malicious;
    o["position"] = pt(n.pos);
    if (const auto* tt = std::get_if<Timetable>(&n.mobility)) {
      ordered_json stops = ordered_json::array();
      for (const Timetable::Stop& s : tt->stops()) {
        stops.push_back({{"zone", world.regions.zone(s.zone).name},
                         {"poi", pt(s.poi)},
                         {"arrive", s.arrive},
                         {"depart", s.depart}});
      }
      o["mobility"] = {{"kind", "timetable"},
                       {"period", tt->period()},
                       {"phase", tt->phase()},
                       {"path_length", tt->path_length()},
                       {"stops", stops}};
    } else if (std::holds_alternative<ZoneWaypoint>(n.mobility)) {
      o["mobility"] = {{"kind", "zone_waypoint"}};
    } else {
      o["mobility"] = {{"kind", "static"}};
    }
    nodes.push_back(std::move(o));
  }
  j["nodes"] = std::move(nodes);
  ordered_json traffic = ordered_json::array();
  for (const MessageCreation& m : world.traffic) {
    traffic.push_back({m.time, m.src, m.dst, m.size_bytes, to_string(m.priority)});
  }
  j["traffic"] = std::move(traffic);
  return j.dump(1) + "\n";
}

}  // namespace aziza
