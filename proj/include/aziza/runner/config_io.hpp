#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "aziza/routing/factory.hpp"
#include "aziza/scenario/config.hpp"

namespace aziza {

/// Routing parameters as they appear in a configuration file.
struct RoutingConfig {
  ZoneProbParams zone;
  TrustParams trust;
  EnergyPolicy energy;
  DecisionThresholds thresholds;
  /// "closed_form", "tree" (reads model_file) or "predictability_gate".
  std::string model = "closed_form";
  std::string model_file;
  int intra_copies = 4;
  bool trust_enabled = true;
  double timeout_scan = 60.0;

  ProphetParams prophet;
  int snw_copies = 4;
  MaxPropParams maxprop;
  BubbleRapParams bubblerap;
};

struct SimConfig {
  ScenarioConfig scenario = default_scenario();
  RoutingConfig routing;
};

/// Overlays a JSON document onto the defaults. Unknown keys, wrong types and
/// malformed JSON throw InvalidConfig; `where` is the key path or "line:col".
/// The result is validated.
SimConfig parse_sim_config(const std::string& text);
SimConfig load_sim_config(const std::filesystem::path& path);

/// Canonical JSON with every field spelled out (pretty-printed, stable key order).
std::string sim_config_json(const SimConfig& config);

/// 64-bit FNV-1a, as 16 lowercase hex digits.
std::string fnv1a_hex(const std::string& bytes);

/// Loads the tree file when the model is "tree".
RouterOptions router_options(const RoutingConfig& routing, bool record_decisions = false);

}  // namespace aziza
