#include "aziza/sim/world.hpp"

namespace aziza {

World make_empty_world(double map_size) {
  World w;
  w.regions = ZoneMap::single(map_size);
  w.routing_zones = w.regions;
  w.region_to_zone = {0};
  return w;
}

World make_world(std::vector<ZoneConfig> zones, double map_size) {
  World w;
  w.regions = ZoneMap(std::move(zones), map_size);
  w.routing_zones = w.regions;
  w.region_to_zone.resize(w.regions.size());
  for (std::size_t z = 0; z < w.regions.size(); ++z) w.region_to_zone[z] = static_cast<ZoneId>(z);
  return w;
}

NodeId add_static_node(World& world, NodeSpec spec, Vec2 pos) {
  const auto id = static_cast<NodeId>(world.nodes.size());
  spec.id = id;
  NodeState n;
  n.region = world.regions.zone_of(pos);
  n.zone = world.region_to_zone.at(n.region);
  if (spec.home_region == kNoZone && spec.cls == NodeClass::Ground) spec.home_region = n.region;
  n.spec = spec;
  n.mobility = StaticPosition{pos};
  n.pos = pos;
  n.energy = EnergyMeter(spec.energy_capacity, spec.costs);
  n.buffer = Buffer(spec.buffer_capacity, world.traffic.size());
  n.acks = AckRegistry(world.traffic.size());
  world.nodes.push_back(std::move(n));
  return id;
}

MessageId add_message(World& world, MessageCreation creation) {
  const auto id = static_cast<MessageId>(world.traffic.size());
  if (creation.dst_zone == kNoZone && creation.dst < world.nodes.size()) {
    const NodeState& d = world.nodes[creation.dst];
    const ZoneId home = d.spec.home_region != kNoZone ? d.spec.home_region : d.region;
    creation.dst_zone = world.region_to_zone.at(home);
  }
  world.traffic.push_back(creation);
  finalize_world(world);
  return id;
}

void finalize_world(World& world) {
  const std::size_t universe = world.traffic.size();
  for (NodeState& n : world.nodes) {
    if (n.buffer.empty()) {
      n.buffer = Buffer(n.spec.buffer_capacity, universe);
    }
    if (n.acks.size() == 0) n.acks = AckRegistry(universe);
  }
}

}  // namespace aziza
