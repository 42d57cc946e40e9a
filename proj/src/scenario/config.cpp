#include "aziza/scenario/config.hpp"

#include <cmath>
#include <set>
#include <string>

#include "aziza/core/errors.hpp"
#include "aziza/scenario/zones.hpp"

namespace aziza {

const ClassProfile& ScenarioConfig::profile(NodeClass c) const {
  switch (c) {
    case NodeClass::Ground: return ground;
    case NodeClass::Vehicle: return vehicle;
    case NodeClass::UAV: return uav;
  }
  return ground;
}

std::vector<ZoneConfig> default_flood_zones(double map_size) {
  const double s = map_size / 10'000.0;
  auto p = [s](double x, double y) { return Vec2{x * s, y * s}; };
  auto r = [s](double x0, double y0, double x1, double y1) { return Rect{x0 * s, y0 * s, x1 * s, y1 * s}; };
  return {
      {"North", r(0, 7000, 10000, 10000), {p(5000, 8500), p(2000, 8500), p(8000, 8500)}},
      {"South", r(0, 0, 10000, 3000), {p(5000, 1500), p(2000, 1500), p(8000, 1500)}},
      {"East", r(7000, 3000, 10000, 7000), {p(8500, 5000), p(8500, 3900)}},
      {"West", r(0, 3000, 3000, 7000), {p(1500, 5000), p(1500, 6100)}},
      {"Central", r(3000, 3000, 7000, 7000), {p(5000, 5000), p(4000, 4000)}},
  };
}

std::vector<std::vector<RouteStop>> default_vehicle_routes() {
  return {
      {{"North", 0}, {"West", 0}},
      {{"South", 0}, {"East", 0}},
      {{"North", 1}, {"East", 1}, {"South", 1}, {"West", 1}},
  };
}

ScenarioConfig default_scenario() {
  ScenarioConfig c;
  c.zones = default_flood_zones(c.map_size);
  c.vehicles.routes = default_vehicle_routes();
  return c;
}

namespace {

void require(bool ok, const std::string& where, const std::string& what) {
  if (!ok) throw InvalidConfig(where, what);
}

void require_fraction(double v, const std::string& where) {
  require(std::isfinite(v) && v >= 0.0 && v <= 1.0, where, "must be within [0, 1]");
}

void require_positive(double v, const std::string& where) {
  require(std::isfinite(v) && v > 0.0, where, "must be > 0");
}

void validate_profile(const ClassProfile& p, const std::string& where) {
  require_positive(p.radio_range_m, where + ".radio_range");
  require_positive(p.energy_capacity_j, where + ".energy_capacity");
  require_fraction(p.initial_trust, where + ".initial_trust");
  require(p.costs.tx_j >= 0 && p.costs.rx_j >= 0 && p.costs.idle_j_per_s >= 0, where + ".costs",
          "energy costs must be non-negative");
}

}  // namespace

void validate(const ScenarioConfig& c) {
  require_positive(c.map_size, "map_size");
  require(!c.zones.empty(), "zones", "at least one zone is required");
  // ZoneMap's constructor checks tiling.
  const ZoneMap map(c.zones, c.map_size);
  std::set<std::string> names;
  for (std::size_t i = 0; i < c.zones.size(); ++i) {
    const auto& z = c.zones[i];
    const std::string where = "zones[" + std::to_string(i) + "]";
    require(names.insert(z.name).second, where + ".name", "duplicate zone name '" + z.name + "'");
    require(!z.pois.empty(), where + ".pois", "every zone needs at least one POI");
    for (std::size_t k = 0; k < z.pois.size(); ++k) {
      require(z.bounds.contains_closed(z.pois[k]), where + ".pois[" + std::to_string(k) + "]",
              "POI lies outside its zone");
    }
  }
  require(map.find(c.hub_zone).has_value(), "hub_zone", "unknown zone '" + c.hub_zone + "'");

  require(c.ground_count >= 0, "ground_count", "must be >= 0");
  const auto& g = c.ground_mobility;
  require(g.speed_min > 0 && g.speed_max >= g.speed_min, "ground_mobility.speed",
          "need 0 < speed_min <= speed_max");
  require(g.pause_min >= 0 && g.pause_max >= g.pause_min, "ground_mobility.pause",
          "need 0 <= pause_min <= pause_max");
  require_fraction(g.poi_bias, "ground_mobility.poi_bias");
  require_positive(g.cluster_radius, "ground_mobility.cluster_radius");

  require(c.vehicles.count >= 0, "vehicles.count", "must be >= 0");
  require_positive(c.vehicles.speed, "vehicles.speed");
  require_positive(c.vehicles.departure_period, "vehicles.departure_period");
  require(c.vehicles.stop_dwell >= 0, "vehicles.stop_dwell", "must be >= 0");
  require(c.vehicles.count == 0 || !c.vehicles.routes.empty(), "vehicles.routes",
          "vehicles need at least one route");
  for (std::size_t r = 0; r < c.vehicles.routes.size(); ++r) {
    for (std::size_t s = 0; s < c.vehicles.routes[r].size(); ++s) {
      const auto& stop = c.vehicles.routes[r][s];
      const std::string where = "vehicles.routes[" + std::to_string(r) + "][" + std::to_string(s) + "]";
      const auto z = map.find(stop.zone);
      require(z.has_value(), where, "unknown zone '" + stop.zone + "'");
      require(stop.poi < map.zone(*z).pois.size(), where, "POI index out of range");
    }
  }

  require(c.uavs.count >= 0, "uavs.count", "must be >= 0");
  require_positive(c.uavs.speed, "uavs.speed");
  require_positive(c.uavs.cycle, "uavs.cycle");
  require(c.uavs.dwell >= 0, "uavs.dwell", "must be >= 0");
  for (const auto& name : c.uavs.loop) {
    require(map.find(name).has_value(), "uavs.loop", "unknown zone '" + name + "'");
  }

  validate_profile(c.ground, "classes.ground");
  validate_profile(c.vehicle, "classes.vehicle");
  validate_profile(c.uav, "classes.uav");

  const auto& t = c.traffic;
  require(t.rate_per_hour >= 0 && std::isfinite(t.rate_per_hour), "traffic.rate_per_hour", "must be >= 0");
  require(t.size_min > 0 && t.size_max >= t.size_min, "traffic.size", "need 0 < size_min <= size_max");
  require_positive(t.ttl, "traffic.ttl");
  double mix = 0.0;
  for (double m : t.priority_mix) {
    require_fraction(m, "traffic.priority_mix");
    mix += m;
  }
  require(std::abs(mix - 1.0) < 1e-9, "traffic.priority_mix", "must sum to 1");
  require_fraction(t.hub_weight, "traffic.hub_weight");
  require_fraction(t.intra_zone_fraction, "traffic.intra_zone_fraction");

  require_fraction(c.blackhole_frac, "blackhole_frac");
  require_positive(c.bandwidth_bps, "bandwidth_bps");
  require(c.buffer_bytes > 0, "buffer_bytes", "must be > 0");
  require_positive(c.tick, "tick");
  require(c.horizon >= 0 && std::isfinite(c.horizon), "horizon", "must be >= 0");
}

}  // namespace aziza
