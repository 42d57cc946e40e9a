#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <unordered_map>
#include <vector>

#include "aziza/sim/event_log.hpp"
#include "aziza/sim/router.hpp"
#include "aziza/sim/transfer.hpp"
#include "aziza/sim/world.hpp"

namespace aziza {

/// A contact given explicitly instead of derived from positions.
struct ScriptedContact {
  NodeId a = kNoNode;
  NodeId b = kNoNode;
  double start = 0.0;
  double end = 0.0;
};

struct EngineOptions {
  /// Contacts come only from `script`; node positions are still advanced but
  /// never tested for range.
  bool scripted = false;
  std::vector<ScriptedContact> script;
};

struct RunStats {
  std::uint64_t created = 0;
  std::uint64_t delivered = 0;
  std::uint64_t relayed = 0;
  std::uint64_t aborted = 0;
  std::uint64_t buffer_full = 0;
  std::uint64_t contacts = 0;
  /// Largest number of buffered instances of any one message at any time.
  int max_live_copies = 0;
};

/// First arrival of a message at its destination.
struct Delivery {
  MessageId msg = 0;
  double time = 0.0;
  /// Source first, destination last.
  std::vector<NodeId> trace;
};

/// Result of enqueue_transfer: the scheduled job, or why it was refused.
struct TransferResult {
  std::optional<TransferJob> job;
  TransferError error = TransferError::NoContact;

  explicit operator bool() const { return job.has_value(); }
};

class Engine {
 public:
  Engine(World& world, Router& router, EngineOptions options = {});
  Engine(const Engine&) = delete;
  Engine& operator=(const Engine&) = delete;

  /// Samples positions and contacts at t = 0.
  void start();
  /// Advances one tick. Returns false once the horizon is reached.
  bool step();
  /// Closes the run: notifies the router and writes energy summaries.
  void finish();
  /// start(), step() to the horizon, finish().
  void run();

  double now() const { return now_; }
  World& world() { return world_; }
  const World& world() const { return world_; }
  EventLog& log() { return log_; }
  const EventLog& log() const { return log_; }
  const RunStats& stats() const { return stats_; }

  bool in_contact(NodeId a, NodeId b) const;
  const Link* link_between(NodeId a, NodeId b) const;
  /// Currently connected peers of `n`, ascending.
  const std::vector<NodeId>& neighbors(NodeId n) const { return adjacency_.at(n); }
  bool link_busy(NodeId a, NodeId b) const;

  bool delivered(MessageId id) const { return id < delivered_.size() && delivered_[id]; }
  const std::vector<Delivery>& deliveries() const { return deliveries_; }
  int live_copies(MessageId id) const { return live_.at(id); }

  /// Pushes a transfer onto the contact's queue. Validated now and again when
  /// the radio becomes free; the returned job carries the projected timing.
  TransferResult enqueue_transfer(NodeId sender, NodeId receiver, const TransferRequest& request);

  /// Removes `id` from `node`'s buffer and logs it. Returns false if not held.
  bool drop(NodeId node, MessageId id, DropReason reason);

  /// Asks for `node`'s idle links to be polled once the current callback returns.
  void kick(NodeId node);

 private:
  enum class QKind : std::uint8_t { TransferComplete = 0, ContactClose = 1, MessageCreate = 2, ContactOpen = 3 };
  struct QEvent {
    double time;
    QKind kind;
    NodeId node;
    MessageId msg;
    std::uint64_t seq;
    std::uint64_t ref;
  };
  struct QLater {
    bool operator()(const QEvent& x, const QEvent& y) const;
  };
  struct Queued {
    NodeId from;
    NodeId to;
    TransferRequest request;
  };
  struct LinkState {
    Link link;
    bool busy = false;
    std::uint64_t job = 0;
    double free_at = 0.0;
    int next_dir = 0;
    std::deque<Queued> pushed;
  };

  static std::uint64_t key(NodeId a, NodeId b);
  LinkState* find_link(NodeId a, NodeId b);
  const LinkState* find_link(NodeId a, NodeId b) const;

  void schedule(QEvent e);
  void process(const QEvent& e);
  void advance_mobility(double t0, double dt);
  void detect_contacts();
  void open_contact(NodeId a, NodeId b);
  void close_contact(NodeId a, NodeId b, TransferError cause);
  void create_message(MessageId id);
  void complete_transfer(std::uint64_t seq);
  void abort_job(LinkState& ls, TransferError cause);
  void settle_custody(const TransferJob& job, bool transferred);
  std::optional<TransferError> validate(const LinkState& ls, NodeId from, NodeId to, const TransferRequest& r,
                                        bool make_room);
  std::optional<TransferError> begin(LinkState& ls, NodeId from, NodeId to, const TransferRequest& r);
  void poll(LinkState& ls);
  void settle();
  void learn_acks(NodeId node, const IdSet& ids);
  void add_ack(NodeId node, MessageId id);
  void insert_copy(NodeId node, Message m);
  void debit(NodeId node, EnergyEventKind kind, double seconds = 0.0);
  void kill(NodeId node);
  void reap_expired();

  World& world_;
  Router& router_;
  EngineOptions options_;
  EventLog log_;
  RunStats stats_;
  double now_ = 0.0;
  bool started_ = false;
  bool finished_ = false;

  std::priority_queue<QEvent, std::vector<QEvent>, QLater> queue_;
  std::uint64_t seq_ = 0;
  LinkId next_link_id_ = 1;
  std::map<std::uint64_t, LinkState> links_;
  std::vector<std::vector<NodeId>> adjacency_;
  std::unordered_map<std::uint64_t, TransferJob> jobs_;
  // (msg, sender) pairs whose custody is in flight on some link.
  std::set<std::uint64_t> releasing_;
  // (msg, receiver) pairs with a copy in flight.
  std::set<std::uint64_t> arriving_;

  std::set<std::uint64_t> to_poll_;
  std::vector<NodeId> dying_;
  bool settling_ = false;

  std::vector<char> delivered_;
  std::vector<Delivery> deliveries_;
  std::vector<int> live_;
  std::vector<MessageId> expiry_order_;
  std::size_t expiry_next_ = 0;
  std::vector<std::pair<NodeId, NodeId>> open_pairs_;
};

}  // namespace aziza
