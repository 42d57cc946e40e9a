#pragma once

#include <cstdint>
#include <limits>

namespace aziza {

using NodeId = std::uint32_t;
using MessageId = std::uint32_t;
/// Index into a ZoneMap.
using ZoneId = std::uint16_t;

inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();
inline constexpr ZoneId kNoZone = std::numeric_limits<ZoneId>::max();

enum class NodeClass : std::uint8_t { Ground, Vehicle, UAV };

const char* to_string(NodeClass c);

}  // namespace aziza
