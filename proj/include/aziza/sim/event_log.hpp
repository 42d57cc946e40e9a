#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "aziza/core/ids.hpp"

namespace aziza {

enum class EventKind : std::uint8_t {
  MessageCreated,
  ContactOpen,
  ContactClose,
  TransferComplete,
  TransferAbort,
  MessageDelivered,
  MessageDropped,
  NodeDead,
};

enum class DropReason : std::uint8_t {
  None,
  Ttl,
  Overflow,
  Blackhole,
  Ack,
  Routing,
  SourceFull,
  ContactClosed,
  NodeDead,
  Duplicate,
};

const char* to_string(EventKind k);
const char* to_string(DropReason r);

/// One log record. `peer` is the other endpoint for contact and transfer
/// records and the sender for deliveries. `value` carries the hop count of a
/// delivery and the message size of transfer records.
struct Event {
  double time = 0.0;
  EventKind kind = EventKind::MessageCreated;
  DropReason reason = DropReason::None;
  NodeId node = kNoNode;
  NodeId peer = kNoNode;
  MessageId msg = 0;
  std::int64_t value = 0;
};

/// Closing energy ledger of one node.
struct EnergySummary {
  NodeId node = kNoNode;
  std::int64_t capacity_uj = 0;
  std::int64_t residual_uj = 0;
  std::uint64_t tx_count = 0;
  std::uint64_t rx_count = 0;
  std::int64_t idle_uj = 0;
  std::int64_t tx_cost_uj = 0;
  std::int64_t rx_cost_uj = 0;
};

class EventLog {
 public:
  void add(const Event& e) { events_.push_back(e); }
  const std::vector<Event>& events() const { return events_; }
  std::vector<EnergySummary>& energy() { return energy_; }
  const std::vector<EnergySummary>& energy() const { return energy_; }
  void clear();

  /// JSON lines, one object per event followed by one per energy summary.
  void write_jsonl(std::ostream& out) const;
  std::string to_jsonl() const;

 private:
  std::vector<Event> events_;
  std::vector<EnergySummary> energy_;
};

}  // namespace aziza
