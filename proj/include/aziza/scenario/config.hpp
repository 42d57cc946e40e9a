#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "aziza/core/energy.hpp"
#include "aziza/core/geometry.hpp"
#include "aziza/core/ids.hpp"

namespace aziza {

struct ZoneConfig {
  std::string name;
  Rect bounds;
  /// Shelter / village cluster centres. The first entry is the zone's primary
  /// POI (UAV waypoint, vehicle stop, hub parking spot).
  std::vector<Vec2> pois;
};

/// Radio, battery and trust-bootstrap settings shared by every node of a class.
struct ClassProfile {
  double radio_range_m = 10.0;
  double energy_capacity_j = 14'400.0;
  /// Trust other nodes assign to a never-seen node of this class.
  double initial_trust = 0.5;
  EnergyCosts costs;
};

struct GroundMobilityConfig {
  double speed_min = 0.5;
  double speed_max = 1.5;
  double pause_min = 0.0;
  double pause_max = 120.0;
  /// Probability that a new waypoint is drawn near a POI rather than uniformly in the zone.
  double poi_bias = 0.9;
  double cluster_radius = 20.0;
};

/// One stop of a vehicle route: a zone and which of its POIs to visit.
struct RouteStop {
  std::string zone;
  std::size_t poi = 0;
};

struct VehicleConfig {
  int count = 3;
  double speed = 10.0;
  double departure_period = 21'600.0;
  double stop_dwell = 1'800.0;
  /// Per-vehicle village tours starting and ending at the hub's primary POI.
  /// Vehicle k uses routes[k % routes.size()].
  std::vector<std::vector<RouteStop>> routes;
};

struct UavConfig {
  int count = 2;
  double speed = 15.0;
  /// Target revisit period of every zone; the loop is stretched to this by loitering.
  double cycle = 10'800.0;
  double dwell = 120.0;
  /// Zones in loop order (primary POIs). Empty means hub first, then every other zone in map order.
  std::vector<std::string> loop;
};

struct TrafficProfile {
  double rate_per_hour = 2.0;
  std::uint32_t size_min = 51'200;
  std::uint32_t size_max = 204'800;
  double ttl = 43'200.0;
  /// Probabilities of {Critical, Important, Routine}.
  std::array<double, 3> priority_mix{0.2, 0.3, 0.5};
  /// Share of inter-zone traffic addressed to the hub zone's residents.
  double hub_weight = 0.8;
  /// Share of traffic addressed to a resident of the source's own zone.
  double intra_zone_fraction = 0.0;
};

struct ScenarioConfig {
  double map_size = 10'000.0;
  std::vector<ZoneConfig> zones;
  std::string hub_zone = "Central";

  int ground_count = 60;
  GroundMobilityConfig ground_mobility;
  VehicleConfig vehicles;
  UavConfig uavs;

  ClassProfile ground{10.0, 14'400.0, 0.5, {}};
  ClassProfile vehicle{50.0, 200'000.0, 0.8, {}};
  ClassProfile uav{50.0, 200'000.0, 0.8, {}};

  TrafficProfile traffic;
  double blackhole_frac = 0.0;

  double bandwidth_bps = 2'000'000.0;
  std::uint64_t buffer_bytes = 104'857'600;
  double tick = 1.0;
  double horizon = 172'800.0;

  /// Routing sees the whole map as a single zone (mobility regions are unchanged).
  bool single_routing_zone = false;

  const ClassProfile& profile(NodeClass c) const;
};

/// The five-zone flood layout: Central is the middle 4x4 km square, North and
/// South are full-width 3 km bands, West and East fill the remaining sides.
std::vector<ZoneConfig> default_flood_zones(double map_size = 10'000.0);
std::vector<std::vector<RouteStop>> default_vehicle_routes();
ScenarioConfig default_scenario();

/// Throws InvalidConfig naming the offending field.
void validate(const ScenarioConfig& config);

}  // namespace aziza
