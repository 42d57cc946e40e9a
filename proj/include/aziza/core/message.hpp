#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aziza/core/ids.hpp"

namespace aziza {

enum class Priority : std::uint8_t { Critical, Important, Routine };

/// Critical -> 1.0, Important -> 0.5, Routine -> 0.1.
double urgency_of(Priority p);
const char* to_string(Priority p);
std::optional<Priority> parse_priority(std::string_view name);

/// A bundle copy as held in one node's buffer.
struct Message {
  MessageId id = 0;
  NodeId src = kNoNode;
  NodeId dst_node = kNoNode;
  ZoneId dst_zone = kNoZone;
  std::uint32_t size_bytes = 0;
  double created = 0.0;
  double ttl = 43'200.0;
  Priority priority = Priority::Routine;
  double urgency = 0.1;
  std::vector<NodeId> hop_trace;
  int copies_remaining = 1;
  /// Arrival time at the current holder; drives FIFO ordering.
  double received_at = 0.0;

  double age(double now) const { return now - created; }
  bool expired(double now) const { return now - created > ttl; }
  double deadline() const { return created + ttl; }
  int hop_count() const { return hop_trace.empty() ? 0 : static_cast<int>(hop_trace.size()) - 1; }
};

/// Stable textual id used in logs and traces ("m42").
std::string message_label(MessageId id);

}  // namespace aziza
