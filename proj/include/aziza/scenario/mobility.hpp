#pragma once

#include <variant>
#include <vector>

#include "aziza/core/geometry.hpp"
#include "aziza/core/ids.hpp"
#include "aziza/core/rng.hpp"
#include "aziza/scenario/config.hpp"
#include "aziza/scenario/zones.hpp"

namespace aziza {

struct StaticPosition {
  Vec2 pos;
};

/// Random waypoint confined to one zone, with waypoints biased toward POIs.
class ZoneWaypoint {
 public:
  ZoneWaypoint(Rect bounds, std::vector<Vec2> pois, GroundMobilityConfig params, RngStream rng);

  /// Places the node at a POI-cluster point and picks its first waypoint.
  Vec2 initialize();
  /// Advances by dt seconds from `now` and returns the new position.
  Vec2 step(double now, double dt);

  Vec2 sample_waypoint();
  Vec2 position() const { return pos_; }
  Vec2 target() const { return target_; }
  double speed() const { return speed_; }
  bool paused(double now) const { return now < pause_until_; }
  const Rect& bounds() const { return bounds_; }
  const std::vector<Vec2>& pois() const { return pois_; }
  const GroundMobilityConfig& params() const { return params_; }

 private:
  Vec2 sample_near_poi();
  Vec2 sample_uniform();
  void pick_next_leg();

  Rect bounds_;
  std::vector<Vec2> pois_;
  GroundMobilityConfig params_;
  RngStream rng_;
  Vec2 pos_;
  Vec2 target_;
  double speed_ = 1.0;
  double pause_until_ = 0.0;
};

/// Periodic piecewise-linear path: position is a pure function of time.
/// Used for vehicle schedules and UAV patrol loops.
class Timetable {
 public:
  struct Leg {
    double t0 = 0.0;
    double t1 = 0.0;
    Vec2 from;
    Vec2 to;
  };
  struct Stop {
    ZoneId zone = kNoZone;
    Vec2 poi;
    double arrive = 0.0;
    double depart = 0.0;
  };

  Timetable() = default;
  Timetable(double period, double phase, std::vector<Leg> legs, std::vector<Stop> stops);

  Vec2 at(double t) const;
  double period() const { return period_; }
  double phase() const { return phase_; }
  const std::vector<Leg>& legs() const { return legs_; }
  /// Stops within one period, in period-local time.
  const std::vector<Stop>& stops() const { return stops_; }
  /// Absolute times in [0, horizon] at which a stop in `zone` begins.
  std::vector<double> arrivals_in(ZoneId zone, double horizon) const;
  /// Total travelled distance over one period.
  double path_length() const;

 private:
  double period_ = 1.0;
  double phase_ = 0.0;
  std::vector<Leg> legs_;
  std::vector<Stop> stops_;
};

/// Vehicle tour: departs the hub POI every `departure_period` seconds (at exact
/// multiples of the period), visits each stop for `stop_dwell`, returns and parks.
Timetable build_vehicle_schedule(const ZoneMap& zones, ZoneId hub, const std::vector<RouteStop>& stops,
                                 const VehicleConfig& config);

/// Closed UAV loop over the primary POIs of `loop`. Loiter time is spread over
/// the stops so that one lap takes exactly `config.cycle` seconds (or the bare
/// travel-plus-dwell time when that is already longer).
Timetable build_patrol_loop(const ZoneMap& zones, const std::vector<ZoneId>& loop, const UavConfig& config,
                            double phase);

using Mobility = std::variant<StaticPosition, ZoneWaypoint, Timetable>;

}  // namespace aziza
