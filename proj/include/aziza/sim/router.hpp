#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "aziza/core/id_set.hpp"
#include "aziza/core/message.hpp"
#include "aziza/sim/transfer.hpp"

namespace aziza {

class Engine;

/// An open radio contact as seen by routers. `a < b`.
struct Link {
  LinkId id = 0;
  NodeId a = kNoNode;
  NodeId b = kNoNode;
  double opened = 0.0;

  NodeId other(NodeId n) const { return n == a ? b : a; }
};

/// Routing protocol callbacks. The engine owns buffers, energy and acks; a
/// router decides what crosses each link and keeps its own per-node state.
///
/// Transfers are pulled: whenever a link is idle, the engine asks
/// next_transfer for each direction in turn. A router must not return the same
/// refused request forever; on_refused tells it the request failed.
class Router {
 public:
  virtual ~Router() = default;

  virtual std::string_view name() const = 0;

  /// Called once before the first event. The engine outlives the router's use of it.
  virtual void attach(Engine& engine) { engine_ = &engine; }

  /// Copies given to a freshly created message.
  virtual int initial_copies(const Message&) const { return 1; }

  virtual void on_message_created(NodeId, const Message&, double) {}
  /// After contact open, ack exchange and purging; called once per contact.
  virtual void on_contact_open(const Link&, double) {}
  virtual void on_contact_close(const Link&, double) {}
  /// A message just entered `node`'s buffer (creation or reception).
  virtual void on_message_added(NodeId, MessageId, double) {}
  /// `node` learned acks for `ids` (merged at contact open or at delivery).
  virtual void on_acks_learned(NodeId, const IdSet&, double) {}

  virtual std::optional<TransferRequest> next_transfer(const Link& link, NodeId from, NodeId to, double now) = 0;

  virtual void on_refused(const Link&, NodeId, NodeId, const TransferRequest&, TransferError, double) {}
  virtual void on_transfer_done(const TransferJob&, TransferOutcome, double) {}
  virtual void on_transfer_aborted(const TransferJob&, TransferError, double) {}

  /// Asked when `node` lacks room for `bytes`. May evict (via Engine::drop);
  /// the default keeps everything.
  virtual void make_room(NodeId, std::uint64_t, double) {}

  virtual void on_tick(double) {}
  virtual void on_finish(double) {}

 protected:
  Engine* engine_ = nullptr;
};

}  // namespace aziza
