#include "aziza/routing/epidemic.hpp"

namespace aziza {

void EpidemicRouter::make_room(NodeId node, std::uint64_t bytes, double) { evict_oldest(node, bytes); }

std::optional<TransferRequest> EpidemicRouter::decide(const Link&, NodeId, NodeId, const Message& m, double) {
  return TransferRequest{m.id, 1, SenderCopy::Keep};
}

}  // namespace aziza
