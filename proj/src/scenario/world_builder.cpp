#include "aziza/scenario/world_builder.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "aziza/core/errors.hpp"
#include "aziza/core/rng.hpp"

namespace aziza {

namespace {

NodeSpec make_spec(const ScenarioConfig& c, NodeId id, NodeClass cls, ZoneId home) {
  const ClassProfile& p = c.profile(cls);
  NodeSpec s;
  s.id = id;
  s.cls = cls;
  s.home_region = home;
  s.radio_range = p.radio_range_m;
  s.buffer_capacity = c.buffer_bytes;
  s.energy_capacity = p.energy_capacity_j;
  s.costs = p.costs;
  s.initial_trust = p.initial_trust;
  return s;
}

std::vector<ZoneId> patrol_zones(const ScenarioConfig& c, const ZoneMap& regions, ZoneId hub) {
  std::vector<ZoneId> loop;
  if (c.uavs.loop.empty()) {
    loop.push_back(hub);
    for (ZoneId z = 0; z < regions.size(); ++z) {
      if (z != hub) loop.push_back(z);
    }
    return loop;
  }
  for (const std::string& name : c.uavs.loop) {
    const auto z = regions.find(name);
    if (!z) throw InvalidConfig("uavs.loop", "unknown zone '" + name + "'");
    loop.push_back(*z);
  }
  return loop;
}

}  // namespace

World build_world(const ScenarioConfig& c, std::uint64_t seed) {
  validate(c);
  World w;
  w.seed = seed;
  w.regions = ZoneMap(c.zones, c.map_size);
  w.routing_zones = c.single_routing_zone ? ZoneMap::single(c.map_size) : w.regions;
  w.region_to_zone.resize(w.regions.size());
  for (ZoneId z = 0; z < w.regions.size(); ++z) w.region_to_zone[z] = c.single_routing_zone ? 0 : z;
  w.bandwidth_bps = c.bandwidth_bps;
  w.tick = c.tick;
  w.horizon = c.horizon;
  w.blackhole_frac = c.blackhole_frac;
  w.ttl = c.traffic.ttl;

  const ZoneId hub = *w.regions.find(c.hub_zone);
  NodeId next = 0;
  auto push = [&](NodeSpec spec, Mobility mobility, Vec2 pos) {
    NodeState n;
    n.spec = spec;
    n.mobility = std::move(mobility);
    n.pos = pos;
    n.region = w.regions.zone_of(pos);
    n.zone = w.region_to_zone[n.region];
    n.energy = EnergyMeter(spec.energy_capacity, spec.costs);
    w.nodes.push_back(std::move(n));
  };

  for (int i = 0; i < c.ground_count; ++i) {
    const auto home = static_cast<ZoneId>(i % static_cast<int>(w.regions.size()));
    const ZoneConfig& zc = w.regions.zone(home);
    ZoneWaypoint mob(zc.bounds, zc.pois, c.ground_mobility, RngStream(seed, "mobility/" + std::to_string(next)));
    const Vec2 pos = mob.initialize();
    push(make_spec(c, next, NodeClass::Ground, home), std::move(mob), pos);
    ++next;
  }
  for (int k = 0; k < c.vehicles.count; ++k) {
    const auto& route = c.vehicles.routes.at(static_cast<std::size_t>(k) % c.vehicles.routes.size());
    Timetable tt = build_vehicle_schedule(w.regions, hub, route, c.vehicles);
    const Vec2 pos = tt.at(0.0);
    push(make_spec(c, next, NodeClass::Vehicle, kNoZone), std::move(tt), pos);
    ++next;
  }
  if (c.uavs.count > 0) {
    const std::vector<ZoneId> loop = patrol_zones(c, w.regions, hub);
    for (int k = 0; k < c.uavs.count; ++k) {
      Timetable probe = build_patrol_loop(w.regions, loop, c.uavs, 0.0);
      const double phase = probe.period() * k / c.uavs.count;
      Timetable tt = build_patrol_loop(w.regions, loop, c.uavs, phase);
      const Vec2 pos = tt.at(0.0);
      push(make_spec(c, next, NodeClass::UAV, kNoZone), std::move(tt), pos);
      ++next;
    }
  }

  // Adversaries: a seeded partial shuffle over Ground ids.
  const auto bad = static_cast<std::size_t>(std::llround(c.blackhole_frac * c.ground_count));
  if (bad > 0) {
    std::vector<NodeId> ground(static_cast<std::size_t>(c.ground_count));
    std::iota(ground.begin(), ground.end(), NodeId{0});
    RngStream rng(seed, "adversary");
    for (std::size_t i = 0; i < bad; ++i) {
      const std::size_t j = i + rng.index(ground.size() - i);
      std::swap(ground[i], ground[j]);
      w.nodes[ground[i]].spec.malicious = true;
    }
  }

  std::vector<Resident> residents;
  for (const NodeState& n : w.nodes) {
    if (n.spec.cls == NodeClass::Ground) {
      residents.push_back({n.id(), n.spec.home_region, w.region_to_zone[n.spec.home_region]});
    }
  }
  w.traffic = generate_traffic(residents, hub, c.traffic, c.horizon, seed);
  finalize_world(w);
  return w;
}

}  // namespace aziza
