#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "aziza/core/errors.hpp"
#include "aziza/core/files.hpp"
#include "aziza/metrics/csv.hpp"
#include "aziza/runner/config_io.hpp"
#include "aziza/runner/experiment.hpp"
#include "aziza/scenario/world_builder.hpp"

using namespace aziza;

namespace {

std::string where_of(const std::string& text) {
  try {
    parse_sim_config(text);
  } catch (const InvalidConfig& e) {
    return e.where();
  }
  return "<accepted>";
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("aziza_runner_" + std::to_string(::getpid())) / name;
  std::filesystem::remove_all(dir);
  return dir;
}

ExperimentPlan short_plan(const std::filesystem::path& out) {
  ExperimentPlan p;
  p.base.scenario.horizon = 2 * 3600.0;
  p.protocols = {Protocol::Epidemic, Protocol::Aziza};
  p.seeds = {1, 2};
  p.out_dir = out;
  p.event_log = true;
  return p;
}

}  // namespace

TEST(Config, EmptyObjectGivesDefaults) {
  const SimConfig c = parse_sim_config("{}");
  EXPECT_EQ(sim_config_json(c), sim_config_json(SimConfig{}));
  EXPECT_EQ(c.scenario.ground_count, 60);
}

TEST(Config, CanonicalJsonRoundTrips) {
  SimConfig c;
  c.scenario.blackhole_frac = 0.1;
  c.scenario.uavs.loop = {"Central", "East", "West"};
  c.routing.trust.theta_black = 0.25;
  c.routing.model = "predictability_gate";
  const std::string text = sim_config_json(c);
  EXPECT_EQ(sim_config_json(parse_sim_config(text)), text);
}

TEST(Config, OverlaysFields) {
  const SimConfig c = parse_sim_config(R"({"scenario": {"ground_count": 40, "traffic": {"rate_per_hour": 1.5}},
                                           "routing": {"snw_copies": 8}})");
  EXPECT_EQ(c.scenario.ground_count, 40);
  EXPECT_EQ(c.scenario.traffic.rate_per_hour, 1.5);
  EXPECT_EQ(c.scenario.traffic.ttl, 43'200.0);
  EXPECT_EQ(c.routing.snw_copies, 8);
}

TEST(Config, UnknownKeyNamesItsPath) {
  EXPECT_EQ(where_of(R"({"scenario": {"traffic": {"rate": 2}}})"), "scenario.traffic.rate");
  EXPECT_EQ(where_of(R"({"scnario": {}})"), "scnario");
}

TEST(Config, WrongTypeNamesItsPath) {
  EXPECT_EQ(where_of(R"({"scenario": {"ground_count": "sixty"}})"), "scenario.ground_count");
}

TEST(Config, MalformedJsonGivesLineAndColumn) {
  EXPECT_EQ(where_of("{\n  \"scenario\": {\n    \"ground_count\": 60,,\n  }\n}"), "3:24");
}

TEST(Config, ValidationRunsAfterParse) {
  EXPECT_EQ(where_of(R"({"scenario": {"blackhole_frac": 2.0}})"), "scenario.blackhole_frac");
  EXPECT_EQ(where_of(R"({"routing": {"model": "forest"}})"), "routing.model");
}

TEST(Config, LoadPrefixesPath) {
  const auto dir = scratch("cfg");
  write_file_atomic(dir / "bad.json", R"({"nope": 1})");
  try {
    load_sim_config(dir / "bad.json");
    FAIL();
  } catch (const InvalidConfig& e) {
    EXPECT_NE(std::string(e.what()).find("bad.json"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("nope"), std::string::npos);
  }
  EXPECT_THROW(load_sim_config(dir / "missing.json"), InvalidConfig);
}

TEST(Ablation, Variants) {
  const SimConfig base;
  EXPECT_EQ(sim_config_json(apply_ablation(base, "none")), sim_config_json(base));
  EXPECT_FALSE(apply_ablation(base, "notrust").routing.trust_enabled);
  EXPECT_EQ(apply_ablation(base, "noclassifier").routing.model, "predictability_gate");
  const SimConfig nouav = apply_ablation(base, "nouav");
  EXPECT_EQ(nouav.scenario.uavs.count, 0);
  EXPECT_EQ(nouav.scenario.vehicles.count, 3);
  EXPECT_EQ(build_world(nouav.scenario, 1).node_count(), 63u);
  EXPECT_THROW(apply_ablation(base, "nobattery"), UnknownVariant);
}

TEST(Ablation, NoZonesPutsEveryoneInOneZone) {
  const SimConfig c = apply_ablation(SimConfig{}, "nozones");
  World w = build_world(c.scenario, 1);
  EXPECT_EQ(w.routing_zones.size(), 1u);
  EXPECT_EQ(w.regions.size(), 5u);
  for (ZoneId z : w.region_to_zone) EXPECT_EQ(z, 0u);
}

TEST(Ablation, RouterOptionsFollowVariant) {
  EXPECT_FALSE(router_options(apply_ablation(SimConfig{}, "notrust").routing).aziza.trust_enabled);
  EXPECT_EQ(router_options(apply_ablation(SimConfig{}, "noclassifier").routing).aziza.model.kind(),
            DecisionModel::Kind::PredictabilityGate);
  EXPECT_EQ(router_options(SimConfig{}.routing).aziza.model.kind(), DecisionModel::Kind::ClosedForm);
}

TEST(Plan, PaperMatrixHasSixtyRuns) {
  ExperimentPlan p;
  p.protocols = all_protocols();
  for (std::uint64_t s = 1; s <= 10; ++s) p.seeds.push_back(s);
  const auto specs = expand(p);
  ASSERT_EQ(specs.size(), 60u);
  for (const RunSpec& s : specs) {
    EXPECT_EQ(s.cell.node_count, 60);
    EXPECT_EQ(s.config.scenario.horizon, 172'800.0);
  }
  p.node_counts = {40, 60, 80, 100};
  EXPECT_EQ(expand(p).size(), 240u);
}

TEST(Plan, RejectsBadVariantBeforeRunning) {
  ExperimentPlan p = short_plan(scratch("bad"));
  p.ablations = {"none", "noradio"};
  EXPECT_THROW(expand(p), UnknownVariant);
  EXPECT_THROW(run_plan(p), UnknownVariant);
  EXPECT_FALSE(std::filesystem::exists(p.out_dir / "runs.csv"));
}

TEST(Plan, RerunIsByteIdentical) {
  const auto dir = scratch("rerun");
  ExperimentPlan p = short_plan(dir);
  p.jobs = 2;
  ASSERT_TRUE(run_plan(p).ok());
  const std::string runs = *read_file(dir / "runs.csv");
  const std::string summary = *read_file(dir / "summary.csv");
  const std::string log = *read_file(dir / "logs" / "aziza_none_n60_bh0_s2.events.jsonl");
  p.jobs = 1;
  ASSERT_TRUE(run_plan(p).ok());
  EXPECT_EQ(*read_file(dir / "runs.csv"), runs);
  EXPECT_EQ(*read_file(dir / "summary.csv"), summary);
  EXPECT_EQ(*read_file(dir / "logs" / "aziza_none_n60_bh0_s2.events.jsonl"), log);

  const auto rows = read_runs_csv(dir / "runs.csv");
  ASSERT_EQ(rows.size(), 4u);
  for (const RunMetrics& m : rows) EXPECT_EQ(m.config_hash.size(), 16u);
  EXPECT_NE(rows[0].config_hash, rows[2].config_hash);
}

TEST(Plan, FailedCellDoesNotStopOthers) {
  const auto dir = scratch("isolate");
  ExperimentPlan p = short_plan(dir);
  p.base.routing.model = "tree";
  p.base.routing.model_file = (dir / "does_not_exist.tree").string();
  const PlanResult r = run_plan(p);
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.failures.size(), 2u);
  for (const CellFailure& f : r.failures) EXPECT_EQ(f.stem.rfind("aziza", 0), 0u) << f.stem;
  const auto rows = read_runs_csv(dir / "runs.csv");
  ASSERT_EQ(rows.size(), 2u);
  for (const RunMetrics& m : rows) EXPECT_EQ(m.cell.protocol, "epidemic");
  const auto manifest = read_file(dir / "failures.json");
  ASSERT_TRUE(manifest);
  EXPECT_NE(manifest->find("aziza_none_n60_bh0_s1"), std::string::npos);
}

TEST(Plan, DeterministicCell) {
  RunSpec s;
  s.config.scenario.horizon = 3 * 3600.0;
  s.config.scenario.blackhole_frac = 0.1;
  s.protocol = Protocol::Aziza;
  s.seed = 4;
  s.event_log = true;
  s.decision_trace = true;
  const RunOutput a = run_cell(s);
  const RunOutput b = run_cell(s);
  EXPECT_EQ(a.metrics, b.metrics);
  EXPECT_EQ(a.event_log, b.event_log);
  EXPECT_EQ(a.decision_trace, b.decision_trace);
  EXPECT_FALSE(a.decision_trace.empty());
  EXPECT_EQ(runs_csv({a.metrics}), runs_csv({b.metrics}));
}

TEST(WorldDump, ListsNodesAndZones) {
  const std::string j = world_json(build_world(default_scenario(), 1));
  for (const char* key : {"\"regions\"", "\"routing_zones\"", "\"nodes\"", "\"traffic\"", "\"Central\""}) {
    EXPECT_NE(j.find(key), std::string::npos) << key;
  }
}
