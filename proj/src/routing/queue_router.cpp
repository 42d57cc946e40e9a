#include "aziza/routing/queue_router.hpp"

#include <algorithm>

namespace aziza {

void QueueRouter::attach(Engine& engine) {
  Router::attach(engine);
  queues_.clear();
}

std::vector<MessageId> QueueRouter::order(NodeId from, NodeId to, double) {
  const auto& msgs = world().node(from).buffer.messages();
  std::vector<MessageId> direct;
  std::vector<MessageId> rest;
  for (const Message& m : msgs) {
    (m.dst_node == to ? direct : rest).push_back(m.id);
  }
  direct.insert(direct.end(), rest.begin(), rest.end());
  return direct;
}

void QueueRouter::on_contact_open(const Link& link, double now) {
  exchange(link, now);
  for (int dir = 0; dir < 2; ++dir) {
    const NodeId from = dir == 0 ? link.a : link.b;
    const NodeId to = link.other(from);
    const NodeState& peer = world().node(to);
    std::deque<MessageId>& q = queues_[dkey(from, to)];
    q.clear();
    for (MessageId id : order(from, to, now)) {
      if (!peer.buffer.contains(id) && !peer.acks.acked(id)) q.push_back(id);
    }
  }
}

void QueueRouter::on_contact_close(const Link& link, double) {
  queues_.erase(dkey(link.a, link.b));
  queues_.erase(dkey(link.b, link.a));
}

void QueueRouter::on_message_added(NodeId node, MessageId id, double) {
  for (NodeId peer : engine_->neighbors(node)) {
    auto it = queues_.find(dkey(node, peer));
    if (it == queues_.end()) continue;
    const Message* m = world().node(node).buffer.find(id);
    // Messages for the peer itself jump the queue.
    if (m && m->dst_node == peer) {
      it->second.push_front(id);
    } else {
      it->second.push_back(id);
    }
  }
}

std::optional<TransferRequest> QueueRouter::next_transfer(const Link& link, NodeId from, NodeId to, double now) {
  auto it = queues_.find(dkey(from, to));
  if (it == queues_.end()) return std::nullopt;
  std::deque<MessageId>& q = it->second;
  const NodeState& src = world().node(from);
  const NodeState& dst = world().node(to);
  while (!q.empty()) {
    const MessageId id = q.front();
    q.pop_front();
    const Message* m = src.buffer.find(id);
    if (!m || dst.buffer.contains(id) || dst.acks.acked(id)) continue;
    if (auto req = decide(link, from, to, *m, now)) return req;
  }
  return std::nullopt;
}

void QueueRouter::evict_oldest(NodeId node, std::uint64_t bytes, std::optional<MessageId> keep) {
  NodeState& n = engine_->world().node(node);
  while (!n.buffer.has_room(bytes)) {
    const auto& msgs = n.buffer.messages();
    auto victim = std::find_if(msgs.begin(), msgs.end(), [&](const Message& m) { return !keep || m.id != *keep; });
    if (victim == msgs.end()) return;
    engine_->drop(node, victim->id, DropReason::Overflow);
  }
}

}  // namespace aziza
