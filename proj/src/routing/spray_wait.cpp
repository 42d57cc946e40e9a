#include "aziza/routing/spray_wait.hpp"

namespace aziza {

void SprayAndWaitRouter::make_room(NodeId node, std::uint64_t bytes, double) { evict_oldest(node, bytes); }

std::optional<TransferRequest> SprayAndWaitRouter::decide(const Link&, NodeId, NodeId to, const Message& m, double) {
  if (m.dst_node == to) return TransferRequest{m.id, 1, SenderCopy::Keep};
  if (m.copies_remaining > 1) return TransferRequest{m.id, m.copies_remaining / 2, SenderCopy::Split};
  return std::nullopt;
}

}  // namespace aziza
