#pragma once

#include <cstdint>

#include "aziza/core/ids.hpp"
#include "aziza/core/message.hpp"

namespace aziza {

using LinkId = std::uint64_t;

enum class TransferError : std::uint8_t {
  BufferFull,
  ContactClosed,
  NodeDead,
  NotHeld,
  AlreadyHeld,
  LinkBusy,
  NoContact,
};

const char* to_string(TransferError e);

/// What happens to the sender's copy once the receiver has the message.
enum class SenderCopy : std::uint8_t {
  Keep,     // replication: sender keeps its copy unchanged
  Release,  // custody transfer: sender deletes its copy
  Split,    // spray: sender keeps the copies it did not hand over
};

struct TransferRequest {
  MessageId msg = 0;
  int copies_to_receiver = 1;
  SenderCopy sender_copy = SenderCopy::Keep;
};

struct TransferJob {
  std::uint64_t seq = 0;
  LinkId link = 0;
  NodeId sender = kNoNode;
  NodeId receiver = kNoNode;
  /// Snapshot of the sender's copy when the radio was keyed.
  Message message;
  int copies_to_receiver = 1;
  SenderCopy sender_copy = SenderCopy::Keep;
  double start = 0.0;
  double finish = 0.0;
};

enum class TransferOutcome : std::uint8_t {
  Stored,      // receiver now buffers a copy
  Delivered,   // receiver is the destination (first delivery)
  Duplicate,   // destination already had it, or receiver already holds it / knows its ack
  Blackholed,  // malicious receiver swallowed it
  Expired,     // TTL ran out in flight
  Rejected,    // receiver could not make room at completion
};

/// Seconds needed to push `bytes` over a link of `bandwidth_bps`.
inline double transfer_seconds(std::uint64_t bytes, double bandwidth_bps) {
  return static_cast<double>(bytes) * 8.0 / bandwidth_bps;
}

}  // namespace aziza
