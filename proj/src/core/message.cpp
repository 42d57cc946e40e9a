#include "aziza/core/message.hpp"

#include "aziza/core/ids.hpp"

namespace aziza {

const char* to_string(NodeClass c) {
  switch (c) {
    case NodeClass::Ground: return "ground";
    case NodeClass::Vehicle: return "vehicle";
    case NodeClass::UAV: return "uav";
  }
  return "?";
}

double urgency_of(Priority p) {
  switch (p) {
    case Priority::Critical: return 1.0;
    case Priority::Important: return 0.5;
    case Priority::Routine: return 0.1;
  }
  return 0.1;
}

const char* to_string(Priority p) {
  switch (p) {
    case Priority::Critical: return "critical";
    case Priority::Important: return "important";
    case Priority::Routine: return "routine";
  }
  return "?";
}

std::optional<Priority> parse_priority(std::string_view name) {
  if (name == "critical") return Priority::Critical;
  if (name == "important") return Priority::Important;
  if (name == "routine") return Priority::Routine;
  return std::nullopt;
}

std::string message_label(MessageId id) { return "m" + std::to_string(id); }

}  // namespace aziza
