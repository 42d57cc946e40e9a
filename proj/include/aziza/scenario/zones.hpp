#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "aziza/core/geometry.hpp"
#include "aziza/core/ids.hpp"
#include "aziza/scenario/config.hpp"

namespace aziza {

/// A tiling of the square map into named zones. Every point of the map lies
/// in exactly one zone: rectangles are half-open except along the far map edges.
class ZoneMap {
 public:
  ZoneMap() = default;
  /// Throws InvalidConfig if the zones overlap, leave gaps, or stray off the map.
  ZoneMap(std::vector<ZoneConfig> zones, double map_size);

  /// One zone covering the whole map.
  static ZoneMap single(double map_size);

  ZoneId zone_of(Vec2 p) const;
  bool contains(ZoneId z, Vec2 p) const;
  std::optional<ZoneId> find(std::string_view name) const;

  const ZoneConfig& zone(ZoneId z) const { return zones_.at(z); }
  std::size_t size() const { return zones_.size(); }
  double map_size() const { return map_size_; }
  const std::vector<ZoneConfig>& zones() const { return zones_; }

 private:
  std::vector<ZoneConfig> zones_;
  double map_size_ = 0.0;
};

}  // namespace aziza
