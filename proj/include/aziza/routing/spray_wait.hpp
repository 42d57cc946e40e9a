#pragma once

#include "aziza/routing/queue_router.hpp"

namespace aziza {

/// Binary Spray-and-Wait: a carrier with c > 1 copies hands floor(c/2) to the
/// peer; with one copy left it waits for the destination.
class SprayAndWaitRouter : public QueueRouter {
 public:
  explicit SprayAndWaitRouter(int copies = 4) : copies_(copies) {}
  std::string_view name() const override { return "snw"; }
  int initial_copies(const Message&) const override { return copies_; }
  void make_room(NodeId node, std::uint64_t bytes, double now) override;

 protected:
  std::optional<TransferRequest> decide(const Link& link, NodeId from, NodeId to, const Message& m,
                                        double now) override;

 private:
  int copies_;
};

}  // namespace aziza
