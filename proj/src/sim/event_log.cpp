#include "aziza/sim/event_log.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>

namespace aziza {

const char* to_string(EventKind k) {
  switch (k) {
    case EventKind::MessageCreated: return "message_created";
    case EventKind::ContactOpen: return "contact_open";
    case EventKind::ContactClose: return "contact_close";
    case EventKind::TransferComplete: return "transfer_complete";
    case EventKind::TransferAbort: return "transfer_abort";
    case EventKind::MessageDelivered: return "message_delivered";
    case EventKind::MessageDropped: return "message_dropped";
    case EventKind::NodeDead: return "node_dead";
  }
  return "unknown";
}

const char* to_string(DropReason r) {
  switch (r) {
    case DropReason::None: return "none";
    case DropReason::Ttl: return "ttl";
    case DropReason::Overflow: return "overflow";
    case DropReason::Blackhole: return "blackhole";
    case DropReason::Ack: return "ack";
    case DropReason::Routing: return "routing_drop";
    case DropReason::SourceFull: return "source_full";
    case DropReason::ContactClosed: return "contact_closed";
    case DropReason::NodeDead: return "node_dead";
    case DropReason::Duplicate: return "duplicate";
  }
  return "unknown";
}

void EventLog::clear() {
  events_.clear();
  energy_.clear();
}

void EventLog::write_jsonl(std::ostream& out) const {
  char buf[256];
  for (const Event& e : events_) {
    int n = std::snprintf(buf, sizeof buf, "{\"t\":%.6f,\"ev\":\"%s\",\"node\":%u", e.time, to_string(e.kind), e.node);
    out.write(buf, n);
    if (e.peer != kNoNode) {
      n = std::snprintf(buf, sizeof buf, ",\"peer\":%u", e.peer);
      out.write(buf, n);
    }
    switch (e.kind) {
      case EventKind::ContactOpen:
      case EventKind::ContactClose:
      case EventKind::NodeDead:
        break;
      case EventKind::MessageDelivered:
        n = std::snprintf(buf, sizeof buf, ",\"msg\":\"m%u\",\"hops\":%lld", e.msg, static_cast<long long>(e.value));
        out.write(buf, n);
        break;
      default:
        n = std::snprintf(buf, sizeof buf, ",\"msg\":\"m%u\",\"bytes\":%lld", e.msg, static_cast<long long>(e.value));
        out.write(buf, n);
        break;
    }
    if (e.reason != DropReason::None) {
      n = std::snprintf(buf, sizeof buf, ",\"reason\":\"%s\"", to_string(e.reason));
      out.write(buf, n);
    }
    out << "}\n";
  }
  for (const EnergySummary& s : energy_) {
    const int n = std::snprintf(buf, sizeof buf,
                                "{\"ev\":\"energy\",\"node\":%u,\"capacity_uj\":%lld,\"residual_uj\":%lld,"
                                "\"tx\":%llu,\"rx\":%llu,\"idle_uj\":%lld}\n",
                                s.node, static_cast<long long>(s.capacity_uj), static_cast<long long>(s.residual_uj),
                                static_cast<unsigned long long>(s.tx_count), static_cast<unsigned long long>(s.rx_count),
                                static_cast<long long>(s.idle_uj));
    out.write(buf, n);
  }
}

std::string EventLog::to_jsonl() const {
  std::ostringstream os;
  write_jsonl(os);
  return os.str();
}

}  // namespace aziza
