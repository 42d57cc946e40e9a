#include "aziza/scenario/zones.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "aziza/core/errors.hpp"

namespace aziza {

ZoneMap::ZoneMap(std::vector<ZoneConfig> zones, double map_size) : zones_(std::move(zones)), map_size_(map_size) {
  if (zones_.empty()) throw InvalidConfig("zones", "at least one zone is required");
  double area = 0.0;
  for (std::size_t i = 0; i < zones_.size(); ++i) {
    const Rect& r = zones_[i].bounds;
    const std::string where = "zones[" + std::to_string(i) + "].bounds";
    if (!(r.x1 > r.x0 && r.y1 > r.y0)) throw InvalidConfig(where, "empty rectangle");
    if (r.x0 < 0 || r.y0 < 0 || r.x1 > map_size || r.y1 > map_size) {
      throw InvalidConfig(where, "rectangle leaves the map");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (r.overlaps(zones_[j].bounds)) {
        throw InvalidConfig(where, "overlaps zone '" + zones_[j].name + "'");
      }
    }
    area += r.area();
  }
  const double map_area = map_size * map_size;
  if (std::abs(area - map_area) > 1e-6 * map_area) {
    throw InvalidConfig("zones", "zones do not tile the map (covered area differs from map area)");
  }
}

ZoneMap ZoneMap::single(double map_size) {
  return ZoneMap({ZoneConfig{"All", Rect{0, 0, map_size, map_size}, {Vec2{map_size / 2, map_size / 2}}}}, map_size);
}

bool ZoneMap::contains(ZoneId z, Vec2 p) const {
  const Rect& r = zones_[z].bounds;
  const bool in_x = p.x >= r.x0 && (p.x < r.x1 || (r.x1 >= map_size_ && p.x <= r.x1));
  const bool in_y = p.y >= r.y0 && (p.y < r.y1 || (r.y1 >= map_size_ && p.y <= r.y1));
  return in_x && in_y;
}

ZoneId ZoneMap::zone_of(Vec2 p) const {
  for (std::size_t i = 0; i < zones_.size(); ++i) {
    if (contains(static_cast<ZoneId>(i), p)) return static_cast<ZoneId>(i);
  }
  // Off-map points (only reachable through hand-built positions) snap to the nearest zone.
  ZoneId best = 0;
  double best_d = INFINITY;
  for (std::size_t i = 0; i < zones_.size(); ++i) {
    const Rect& r = zones_[i].bounds;
    const Vec2 q{std::clamp(p.x, r.x0, r.x1), std::clamp(p.y, r.y0, r.y1)};
    const double d = distance(p, q);
    if (d < best_d) {
      best_d = d;
      best = static_cast<ZoneId>(i);
    }
  }
  return best;
}

std::optional<ZoneId> ZoneMap::find(std::string_view name) const {
  for (std::size_t i = 0; i < zones_.size(); ++i) {
    if (zones_[i].name == name) return static_cast<ZoneId>(i);
  }
  return std::nullopt;
}

}  // namespace aziza
