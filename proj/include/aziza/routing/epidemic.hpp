#pragma once

#include "aziza/routing/queue_router.hpp"

namespace aziza {

/// Flooding: every message the peer lacks is offered, oldest first; a full
/// receiver drops its oldest messages.
class EpidemicRouter : public QueueRouter {
 public:
  std::string_view name() const override { return "epidemic"; }
  void make_room(NodeId node, std::uint64_t bytes, double now) override;

 protected:
  std::optional<TransferRequest> decide(const Link& link, NodeId from, NodeId to, const Message& m,
                                        double now) override;
};

}  // namespace aziza
