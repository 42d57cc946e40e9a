#include "aziza/scenario/mobility.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "aziza/core/errors.hpp"

namespace aziza {

ZoneWaypoint::ZoneWaypoint(Rect bounds, std::vector<Vec2> pois, GroundMobilityConfig params, RngStream rng)
    : bounds_(bounds), pois_(std::move(pois)), params_(params), rng_(rng) {}

Vec2 ZoneWaypoint::sample_uniform() {
  return {rng_.uniform(bounds_.x0, bounds_.x1), rng_.uniform(bounds_.y0, bounds_.y1)};
}

Vec2 ZoneWaypoint::sample_near_poi() {
  if (pois_.empty()) return sample_uniform();
  const Vec2 centre = pois_[rng_.index(pois_.size())];
  for (int attempt = 0; attempt < 64; ++attempt) {
    const double r = params_.cluster_radius * std::sqrt(rng_.uniform());
    const double a = 2.0 * std::numbers::pi * rng_.uniform();
    const Vec2 p{centre.x + r * std::cos(a), centre.y + r * std::sin(a)};
    if (bounds_.contains_half_open(p)) return p;
  }
  return centre;
}

Vec2 ZoneWaypoint::sample_waypoint() {
  return rng_.bernoulli(params_.poi_bias) ? sample_near_poi() : sample_uniform();
}

void ZoneWaypoint::pick_next_leg() {
  target_ = sample_waypoint();
  speed_ = rng_.uniform(params_.speed_min, params_.speed_max);
}

Vec2 ZoneWaypoint::initialize() {
  pos_ = sample_near_poi();
  pick_next_leg();
  pause_until_ = 0.0;
  return pos_;
}

Vec2 ZoneWaypoint::step(double now, double dt) {
  double t = now;
  const double end = now + dt;
  while (t < end) {
    if (pause_until_ > t) {
      t = std::min(end, pause_until_);
      continue;
    }
    const double remaining = end - t;
    const double dist = distance(pos_, target_);
    const double reach = speed_ * remaining;
    if (dist <= reach) {
      // Arrival: snap, pause, then head for a fresh waypoint.
      pos_ = target_;
      t += speed_ > 0 ? dist / speed_ : remaining;
      pause_until_ = t + rng_.uniform(params_.pause_min, params_.pause_max);
      pick_next_leg();
      if (pause_until_ <= t) pause_until_ = t;
      if (dist == 0.0 && pause_until_ == t) break;  // zero-length leg and zero pause: wait for next step
    } else {
      pos_ = pos_ + (target_ - pos_) * (reach / dist);
      t = end;
    }
  }
  return pos_;
}

Timetable::Timetable(double period, double phase, std::vector<Leg> legs, std::vector<Stop> stops)
    : period_(period), phase_(phase), legs_(std::move(legs)), stops_(std::move(stops)) {}

Vec2 Timetable::at(double t) const {
  if (legs_.empty()) return {};
  double local = std::fmod(t + phase_, period_);
  if (local < 0) local += period_;
  auto it = std::upper_bound(legs_.begin(), legs_.end(), local, [](double v, const Leg& l) { return v < l.t0; });
  const Leg& leg = it == legs_.begin() ? legs_.front() : *std::prev(it);
  const double span = leg.t1 - leg.t0;
  if (span <= 0) return leg.to;
  const double f = std::clamp((local - leg.t0) / span, 0.0, 1.0);
  return leg.from + (leg.to - leg.from) * f;
}

std::vector<double> Timetable::arrivals_in(ZoneId zone, double horizon) const {
  std::vector<double> out;
  for (const Stop& s : stops_) {
    if (s.zone != zone) continue;
    // absolute time t has local time t + phase
    double first = s.arrive - phase_;
    while (first < 0) first += period_;
    for (double t = first; t <= horizon; t += period_) out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

double Timetable::path_length() const {
  double total = 0.0;
  for (const Leg& l : legs_) total += distance(l.from, l.to);
  return total;
}

Timetable build_vehicle_schedule(const ZoneMap& zones, ZoneId hub, const std::vector<RouteStop>& stops,
                                 const VehicleConfig& config) {
  const Vec2 home = zones.zone(hub).pois.at(0);
  std::vector<Timetable::Leg> legs;
  std::vector<Timetable::Stop> visits;
  double t = 0.0;
  Vec2 cur = home;
  auto travel = [&](Vec2 to) {
    const double d = distance(cur, to);
    const double dur = d / config.speed;
    if (dur > 0) legs.push_back({t, t + dur, cur, to});
    t += dur;
    cur = to;
  };
  for (const RouteStop& stop : stops) {
    const auto z = zones.find(stop.zone);
    if (!z) throw InvalidConfig("vehicles.routes", "unknown zone '" + stop.zone + "'");
    const Vec2 poi = zones.zone(*z).pois.at(stop.poi);
    travel(poi);
    visits.push_back({*z, poi, t, t + config.stop_dwell});
    if (config.stop_dwell > 0) legs.push_back({t, t + config.stop_dwell, poi, poi});
    t += config.stop_dwell;
  }
  travel(home);
  if (t > config.departure_period) {
    throw InvalidConfig("vehicles.routes", "tour takes longer than the departure period");
  }
  visits.push_back({hub, home, t, config.departure_period});
  if (t < config.departure_period) legs.push_back({t, config.departure_period, home, home});
  return Timetable(config.departure_period, 0.0, std::move(legs), std::move(visits));
}

Timetable build_patrol_loop(const ZoneMap& zones, const std::vector<ZoneId>& loop, const UavConfig& config,
                            double phase) {
  if (loop.empty()) return Timetable(config.cycle, phase, {}, {});
  std::vector<Vec2> pts;
  for (ZoneId z : loop) pts.push_back(zones.zone(z).pois.at(0));
  const std::size_t n = pts.size();
  double travel_total = 0.0;
  for (std::size_t i = 0; i < n; ++i) travel_total += distance(pts[i], pts[(i + 1) % n]) / config.speed;
  const double bare = travel_total + static_cast<double>(n) * config.dwell;
  const double loiter = std::max(0.0, config.cycle - bare) / static_cast<double>(n);
  const double period = std::max(config.cycle, bare);
  const double stay = config.dwell + loiter;

  std::vector<Timetable::Leg> legs;
  std::vector<Timetable::Stop> visits;
  double t = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    visits.push_back({loop[i], pts[i], t, t + stay});
    if (stay > 0) legs.push_back({t, t + stay, pts[i], pts[i]});
    t += stay;
    const Vec2 next = pts[(i + 1) % n];
    const double dur = distance(pts[i], next) / config.speed;
    if (dur > 0) legs.push_back({t, t + dur, pts[i], next});
    t += dur;
  }
  // Floating-point slack: stretch the final leg to close the period.
  if (!legs.empty()) legs.back().t1 = period;
  return Timetable(period, phase, std::move(legs), std::move(visits));
}

}  // namespace aziza
