#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <unordered_map>
#include <vector>

#include "aziza/sim/engine.hpp"
#include "aziza/sim/router.hpp"

namespace aziza {

/// Shared plumbing for routers that keep a per-direction candidate queue on
/// every open link. The queue is filled at contact open and extended when a
/// node gains a message; each entry is re-checked by `decide` when the link is
/// free, so decisions always see current state.
class QueueRouter : public Router {
 public:
  void attach(Engine& engine) override;
  void on_contact_open(const Link& link, double now) override;
  void on_contact_close(const Link& link, double now) override;
  void on_message_added(NodeId node, MessageId id, double now) override;
  std::optional<TransferRequest> next_transfer(const Link& link, NodeId from, NodeId to, double now) override;

 protected:
  /// Protocol metadata exchange; runs before the queues are built.
  virtual void exchange(const Link&, double) {}
  /// Candidate order for from -> to. The default puts messages addressed to
  /// `to` first, then the rest oldest-first.
  virtual std::vector<MessageId> order(NodeId from, NodeId to, double now);
  virtual std::optional<TransferRequest> decide(const Link& link, NodeId from, NodeId to, const Message& m,
                                                double now) = 0;

  /// Evicts oldest-first until `bytes` fit, never touching `keep`.
  void evict_oldest(NodeId node, std::uint64_t bytes, std::optional<MessageId> keep = std::nullopt);

  Engine& engine() { return *engine_; }
  const World& world() const { return engine_->world(); }
  std::size_t node_count() const { return engine_->world().nodes.size(); }

 private:
  static std::uint64_t dkey(NodeId from, NodeId to) { return (static_cast<std::uint64_t>(from) << 32) | to; }
  std::unordered_map<std::uint64_t, std::deque<MessageId>> queues_;
};

}  // namespace aziza
