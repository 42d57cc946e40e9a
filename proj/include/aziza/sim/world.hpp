#pragma once

#include <cstdint>
#include <vector>

#include "aziza/core/energy.hpp"
#include "aziza/core/geometry.hpp"
#include "aziza/core/id_set.hpp"
#include "aziza/core/ids.hpp"
#include "aziza/scenario/mobility.hpp"
#include "aziza/scenario/traffic.hpp"
#include "aziza/scenario/zones.hpp"
#include "aziza/sim/buffer.hpp"

namespace aziza {

struct NodeSpec {
  NodeId id = kNoNode;
  NodeClass cls = NodeClass::Ground;
  /// Mobility region a Ground node never leaves; kNoZone for vehicles and UAVs.
  ZoneId home_region = kNoZone;
  double radio_range = 10.0;
  std::uint64_t buffer_capacity = 104'857'600;
  double energy_capacity = 14'400.0;
  EnergyCosts costs;
  double initial_trust = 0.5;
  bool malicious = false;
};

struct NodeState {
  NodeSpec spec;
  Mobility mobility;
  Vec2 pos;
  /// Current physical zone and current routing zone (they differ only when
  /// routing collapses the map into one zone).
  ZoneId region = kNoZone;
  ZoneId zone = kNoZone;
  EnergyMeter energy;
  Buffer buffer;
  AckRegistry acks;
  bool alive = true;

  NodeId id() const { return spec.id; }
};

struct World {
  std::uint64_t seed = 0;
  ZoneMap regions;
  ZoneMap routing_zones;
  /// routing zone of each region
  std::vector<ZoneId> region_to_zone;
  std::vector<NodeState> nodes;
  /// Sorted by time; index == MessageId.
  std::vector<MessageCreation> traffic;
  double bandwidth_bps = 2'000'000.0;
  double tick = 1.0;
  double horizon = 172'800.0;
  double blackhole_frac = 0.0;
  double ttl = 43'200.0;

  std::size_t node_count() const { return nodes.size(); }
  std::size_t message_universe() const { return traffic.size(); }
  NodeState& node(NodeId id) { return nodes.at(id); }
  const NodeState& node(NodeId id) const { return nodes.at(id); }
};

/// Empty world with a single zone of the given size, for hand-built scenarios.
World make_empty_world(double map_size = 1'000.0);
/// Empty world over the given zone tiling; routing zones equal the regions.
World make_world(std::vector<ZoneConfig> zones, double map_size);
/// Appends a node standing still at `pos`; returns its id.
NodeId add_static_node(World& world, NodeSpec spec, Vec2 pos);
/// Appends a message creation and sizes every node's id sets accordingly.
MessageId add_message(World& world, MessageCreation creation);
/// Resizes buffers/ack sets after nodes or messages were added by hand.
void finalize_world(World& world);

}  // namespace aziza
