#pragma once

#include <cstdint>

#include "aziza/scenario/config.hpp"
#include "aziza/sim/world.hpp"

namespace aziza {

/// Builds the flood world: Ground nodes (ids 0..g-1, spread round-robin over
/// zones and placed at POI clusters), then vehicles, then UAVs. The malicious
/// subset is drawn from Ground nodes only.
World build_world(const ScenarioConfig& config, std::uint64_t seed);

}  // namespace aziza
