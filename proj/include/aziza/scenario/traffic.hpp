#pragma once

#include <cstdint>
#include <vector>

#include "aziza/core/ids.hpp"
#include "aziza/core/message.hpp"
#include "aziza/scenario/config.hpp"

namespace aziza {

struct MessageCreation {
  double time = 0.0;
  NodeId src = kNoNode;
  NodeId dst = kNoNode;
  /// Routing zone of the destination's home region.
  ZoneId dst_zone = kNoZone;
  std::uint32_t size_bytes = 0;
  Priority priority = Priority::Routine;
};

/// A traffic-generating resident: id, home region and routing zone.
struct Resident {
  NodeId id = kNoNode;
  ZoneId region = kNoZone;
  ZoneId routing_zone = kNoZone;
};

/// Per-node Poisson message creation over [0, horizon). Each node draws from
/// its own stream ("traffic/<id>"), so adding or removing other nodes never
/// perturbs its sequence. The result is sorted by (time, src); the index of an
/// entry is its MessageId.
std::vector<MessageCreation> generate_traffic(const std::vector<Resident>& residents, ZoneId hub_region,
                                              const TrafficProfile& profile, double horizon, std::uint64_t seed);

}  // namespace aziza
