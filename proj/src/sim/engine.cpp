#include "aziza/sim/engine.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <type_traits>
#include <variant>

namespace aziza {

const char* to_string(TransferError e) {
  switch (e) {
    case TransferError::BufferFull: return "buffer_full";
    case TransferError::ContactClosed: return "contact_closed";
    case TransferError::NodeDead: return "node_dead";
    case TransferError::NotHeld: return "not_held";
    case TransferError::AlreadyHeld: return "already_held";
    case TransferError::LinkBusy: return "link_busy";
    case TransferError::NoContact: return "no_contact";
  }
  return "unknown";
}

namespace {

DropReason reason_for(TransferError e) {
  switch (e) {
    case TransferError::BufferFull: return DropReason::Overflow;
    case TransferError::NodeDead: return DropReason::NodeDead;
    default: return DropReason::ContactClosed;
  }
}

std::uint64_t custody_key(MessageId msg, NodeId sender) { return (std::uint64_t{msg} << 32) | sender; }

}  // namespace

bool Engine::QLater::operator()(const QEvent& x, const QEvent& y) const {
  return std::tie(x.time, x.kind, x.node, x.msg, x.seq) > std::tie(y.time, y.kind, y.node, y.msg, y.seq);
}

Engine::Engine(World& world, Router& router, EngineOptions options)
    : world_(world), router_(router), options_(std::move(options)) {
  adjacency_.resize(world_.nodes.size());
  delivered_.assign(world_.traffic.size(), 0);
  live_.assign(world_.traffic.size(), 0);
  expiry_order_.resize(world_.traffic.size());
  std::iota(expiry_order_.begin(), expiry_order_.end(), MessageId{0});
  std::stable_sort(expiry_order_.begin(), expiry_order_.end(), [&](MessageId x, MessageId y) {
    return world_.traffic[x].time < world_.traffic[y].time;
  });
  for (const NodeState& n : world_.nodes) {
    for (const Message& m : n.buffer.messages()) ++live_.at(m.id);
  }
}

std::uint64_t Engine::key(NodeId a, NodeId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

Engine::LinkState* Engine::find_link(NodeId a, NodeId b) {
  auto it = links_.find(key(a, b));
  return it == links_.end() ? nullptr : &it->second;
}

const Engine::LinkState* Engine::find_link(NodeId a, NodeId b) const {
  auto it = links_.find(key(a, b));
  return it == links_.end() ? nullptr : &it->second;
}

bool Engine::in_contact(NodeId a, NodeId b) const { return find_link(a, b) != nullptr; }

const Link* Engine::link_between(NodeId a, NodeId b) const {
  const LinkState* ls = find_link(a, b);
  return ls ? &ls->link : nullptr;
}

bool Engine::link_busy(NodeId a, NodeId b) const {
  const LinkState* ls = find_link(a, b);
  return ls && ls->busy;
}

void Engine::schedule(QEvent e) {
  e.seq = seq_++;
  queue_.push(e);
}

void Engine::start() {
  if (started_) return;
  started_ = true;
  now_ = 0.0;
  router_.attach(*this);
  for (NodeState& n : world_.nodes) {
    n.region = world_.regions.zone_of(n.pos);
    n.zone = world_.region_to_zone.at(n.region);
    if (n.energy.depleted()) n.alive = false;
  }
  for (MessageId id = 0; id < world_.traffic.size(); ++id) {
    schedule({world_.traffic[id].time, QKind::MessageCreate, world_.traffic[id].src, id, 0, id});
  }
  if (options_.scripted) {
    for (std::size_t i = 0; i < options_.script.size(); ++i) {
      const ScriptedContact& c = options_.script[i];
      if (c.a == c.b || c.end <= c.start || c.a >= world_.nodes.size() || c.b >= world_.nodes.size()) {
        throw std::invalid_argument("scripted contact " + std::to_string(i) + " is malformed");
      }
      schedule({c.start, QKind::ContactOpen, std::min(c.a, c.b), 0, 0, i});
    }
  } else {
    detect_contacts();
  }
  settle();
}

bool Engine::step() {
  if (!started_) start();
  if (now_ >= world_.horizon) return false;
  const double t0 = now_;
  const double t1 = std::min(world_.horizon, t0 + world_.tick);
  while (!queue_.empty() && queue_.top().time <= t1) {
    const QEvent e = queue_.top();
    queue_.pop();
    now_ = std::max(now_, e.time);
    process(e);
    settle();
  }
  now_ = t1;
  advance_mobility(t0, t1 - t0);
  if (!options_.scripted) detect_contacts();
  reap_expired();
  for (NodeState& n : world_.nodes) {
    if (n.alive) debit(n.id(), EnergyEventKind::Idle, t1 - t0);
  }
  router_.on_tick(now_);
  settle();
  return now_ < world_.horizon;
}

void Engine::finish() {
  if (finished_) return;
  finished_ = true;
  router_.on_finish(now_);
  auto& summary = log_.energy();
  summary.clear();
  for (const NodeState& n : world_.nodes) {
    summary.push_back({n.id(), n.energy.capacity_uj(), n.energy.residual_uj(), n.energy.tx_count(),
                       n.energy.rx_count(), n.energy.idle_uj(), n.energy.tx_cost_uj(), n.energy.rx_cost_uj()});
  }
}

void Engine::run() {
  start();
  while (step()) {
  }
  finish();
}

void Engine::process(const QEvent& e) {
  switch (e.kind) {
    case QKind::TransferComplete:
      complete_transfer(e.ref);
      break;
    case QKind::ContactClose: {
      const ScriptedContact& c = options_.script.at(e.ref);
      LinkState* ls = find_link(c.a, c.b);
      // Only close the contact instance this event belongs to.
      if (ls && ls->link.id == e.msg) close_contact(c.a, c.b, TransferError::ContactClosed);
      break;
    }
    case QKind::MessageCreate:
      create_message(e.msg);
      break;
    case QKind::ContactOpen: {
      const ScriptedContact& c = options_.script.at(e.ref);
      if (!world_.nodes[c.a].alive || !world_.nodes[c.b].alive || in_contact(c.a, c.b)) break;
      open_contact(c.a, c.b);
      const LinkState* ls = find_link(c.a, c.b);
      QEvent close{c.end, QKind::ContactClose, std::min(c.a, c.b), static_cast<MessageId>(ls->link.id), 0, e.ref};
      schedule(close);
      break;
    }
  }
}

void Engine::advance_mobility(double t0, double dt) {
  for (NodeState& n : world_.nodes) {
    std::visit(
        [&](auto& m) {
          using T = std::decay_t<decltype(m)>;
          if constexpr (std::is_same_v<T, StaticPosition>) {
            n.pos = m.pos;
          } else if constexpr (std::is_same_v<T, ZoneWaypoint>) {
            n.pos = m.step(t0, dt);
          } else {
            n.pos = m.at(t0 + dt);
          }
        },
        n.mobility);
    n.region = world_.regions.zone_of(n.pos);
    n.zone = world_.region_to_zone[n.region];
  }
}

void Engine::detect_contacts() {
  std::vector<NodeId> order;
  order.reserve(world_.nodes.size());
  double max_range = 0.0;
  for (const NodeState& n : world_.nodes) {
    if (!n.alive) continue;
    order.push_back(n.id());
    max_range = std::max(max_range, n.spec.radio_range);
  }
  std::sort(order.begin(), order.end(), [&](NodeId x, NodeId y) {
    const double ax = world_.nodes[x].pos.x;
    const double bx = world_.nodes[y].pos.x;
    return ax != bx ? ax < bx : x < y;
  });
  std::vector<std::pair<NodeId, NodeId>> now_open;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const NodeState& a = world_.nodes[order[i]];
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      const NodeState& b = world_.nodes[order[j]];
      if (b.pos.x - a.pos.x > max_range) break;
      const double r = std::min(a.spec.radio_range, b.spec.radio_range);
      if (distance_sq(a.pos, b.pos) <= r * r) {
        now_open.emplace_back(std::min(a.id(), b.id()), std::max(a.id(), b.id()));
      }
    }
  }
  std::sort(now_open.begin(), now_open.end());

  std::vector<std::pair<NodeId, NodeId>> closing;
  std::vector<std::pair<NodeId, NodeId>> opening;
  std::set_difference(open_pairs_.begin(), open_pairs_.end(), now_open.begin(), now_open.end(),
                      std::back_inserter(closing));
  std::set_difference(now_open.begin(), now_open.end(), open_pairs_.begin(), open_pairs_.end(),
                      std::back_inserter(opening));
  for (const auto& [a, b] : closing) {
    if (in_contact(a, b)) close_contact(a, b, TransferError::ContactClosed);
  }
  settle();
  for (const auto& [a, b] : opening) {
    if (!in_contact(a, b) && world_.nodes[a].alive && world_.nodes[b].alive) open_contact(a, b);
  }
  open_pairs_ = std::move(now_open);
}

void Engine::open_contact(NodeId a, NodeId b) {
  if (a > b) std::swap(a, b);
  LinkState ls;
  ls.link = {next_link_id_++, a, b, now_};
  ls.free_at = now_;
  auto [it, inserted] = links_.emplace(key(a, b), std::move(ls));
  if (!inserted) return;
  auto add = [](std::vector<NodeId>& v, NodeId x) { v.insert(std::upper_bound(v.begin(), v.end(), x), x); };
  add(adjacency_[a], b);
  add(adjacency_[b], a);
  ++stats_.contacts;
  log_.add({now_, EventKind::ContactOpen, DropReason::None, a, b, 0, 0});

  NodeState& na = world_.nodes[a];
  NodeState& nb = world_.nodes[b];
  const IdSet new_a = na.acks.merge_from(nb.acks);
  const IdSet new_b = nb.acks.merge_from(na.acks);
  learn_acks(a, new_a);
  learn_acks(b, new_b);
  router_.on_contact_open(it->second.link, now_);
  to_poll_.insert(key(a, b));
}

void Engine::close_contact(NodeId a, NodeId b, TransferError cause) {
  auto it = links_.find(key(a, b));
  if (it == links_.end()) return;
  LinkState& ls = it->second;
  if (ls.busy) abort_job(ls, cause);
  const Link link = ls.link;
  links_.erase(it);
  to_poll_.erase(key(a, b));
  auto remove = [](std::vector<NodeId>& v, NodeId x) {
    auto p = std::lower_bound(v.begin(), v.end(), x);
    if (p != v.end() && *p == x) v.erase(p);
  };
  remove(adjacency_[link.a], link.b);
  remove(adjacency_[link.b], link.a);
  log_.add({now_, EventKind::ContactClose, DropReason::None, link.a, link.b, 0, 0});
  router_.on_contact_close(link, now_);
}

void Engine::create_message(MessageId id) {
  const MessageCreation& c = world_.traffic.at(id);
  ++stats_.created;
  log_.add({now_, EventKind::MessageCreated, DropReason::None, c.src, c.dst, id, c.size_bytes});
  NodeState& src = world_.nodes.at(c.src);
  if (!src.alive) {
    log_.add({now_, EventKind::MessageDropped, DropReason::NodeDead, c.src, kNoNode, id, c.size_bytes});
    return;
  }
  Message m;
  m.id = id;
  m.src = c.src;
  m.dst_node = c.dst;
  m.dst_zone = c.dst_zone;
  m.size_bytes = c.size_bytes;
  m.created = c.time;
  m.ttl = world_.ttl;
  m.priority = c.priority;
  m.urgency = urgency_of(c.priority);
  m.hop_trace = {c.src};
  m.received_at = now_;
  m.copies_remaining = std::max(1, router_.initial_copies(m));
  if (!src.buffer.has_room(m.size_bytes)) router_.make_room(c.src, m.size_bytes, now_);
  if (!src.buffer.has_room(m.size_bytes)) {
    log_.add({now_, EventKind::MessageDropped, DropReason::SourceFull, c.src, kNoNode, id, c.size_bytes});
    return;
  }
  insert_copy(c.src, m);
  router_.on_message_created(c.src, *src.buffer.find(id), now_);
  router_.on_message_added(c.src, id, now_);
  kick(c.src);
}

void Engine::insert_copy(NodeId node, Message m) {
  const MessageId id = m.id;
  world_.nodes[node].buffer.insert(std::move(m));
  const int live = ++live_.at(id);
  stats_.max_live_copies = std::max(stats_.max_live_copies, live);
}

bool Engine::drop(NodeId node, MessageId id, DropReason reason) {
  auto m = world_.nodes.at(node).buffer.erase(id);
  if (!m) return false;
  --live_.at(id);
  log_.add({now_, EventKind::MessageDropped, reason, node, kNoNode, id, m->size_bytes});
  return true;
}

void Engine::kick(NodeId node) {
  for (NodeId peer : adjacency_.at(node)) to_poll_.insert(key(node, peer));
}

void Engine::learn_acks(NodeId node, const IdSet& ids) {
  if (ids.empty()) return;
  NodeState& n = world_.nodes[node];
  ids.for_each([&](MessageId id) {
    if (n.buffer.contains(id)) drop(node, id, DropReason::Ack);
  });
  router_.on_acks_learned(node, ids, now_);
}

void Engine::add_ack(NodeId node, MessageId id) {
  NodeState& n = world_.nodes[node];
  if (n.acks.acked(id)) return;
  n.acks.add(id);
  IdSet one;
  one.insert(id);
  learn_acks(node, one);
}

std::optional<TransferError> Engine::validate(const LinkState& ls, NodeId from, NodeId to,
                                              const TransferRequest& r, bool make_room) {
  if (!(ls.link.a == std::min(from, to) && ls.link.b == std::max(from, to))) return TransferError::NoContact;
  NodeState& s = world_.nodes[from];
  NodeState& d = world_.nodes[to];
  if (!s.alive || !d.alive) return TransferError::NodeDead;
  const Message* m = s.buffer.find(r.msg);
  if (!m) return TransferError::NotHeld;
  if (d.buffer.contains(r.msg) || arriving_.count(custody_key(r.msg, to))) return TransferError::AlreadyHeld;
  if (releasing_.count(custody_key(r.msg, from))) return TransferError::NotHeld;
  if (!s.energy.can_afford(EnergyEventKind::Tx) || !d.energy.can_afford(EnergyEventKind::Rx)) {
    return TransferError::NodeDead;
  }
  if (m->dst_node != to && !d.buffer.has_room(m->size_bytes)) {
    if (make_room) router_.make_room(to, m->size_bytes, now_);
    if (!d.buffer.has_room(m->size_bytes)) return TransferError::BufferFull;
  }
  return std::nullopt;
}

TransferResult Engine::enqueue_transfer(NodeId sender, NodeId receiver, const TransferRequest& request) {
  TransferResult out;
  LinkState* ls = find_link(sender, receiver);
  if (!ls) {
    out.error = TransferError::NoContact;
    return out;
  }
  if (auto err = validate(*ls, sender, receiver, request, true)) {
    if (*err == TransferError::BufferFull) ++stats_.buffer_full;
    out.error = *err;
    return out;
  }
  const Message* m = world_.nodes[sender].buffer.find(request.msg);
  double start = ls->busy ? ls->free_at : now_;
  for (const Queued& q : ls->pushed) {
    if (const Message* qm = world_.nodes[q.from].buffer.find(q.request.msg)) {
      start += transfer_seconds(qm->size_bytes, world_.bandwidth_bps);
    }
  }
  TransferJob job;
  job.link = ls->link.id;
  job.sender = sender;
  job.receiver = receiver;
  job.message = *m;
  job.copies_to_receiver = request.copies_to_receiver;
  job.sender_copy = request.sender_copy;
  job.start = start;
  job.finish = start + transfer_seconds(m->size_bytes, world_.bandwidth_bps);
  ls->pushed.push_back({sender, receiver, request});
  to_poll_.insert(key(sender, receiver));
  if (!settling_) settle();
  out.job = job;
  return out;
}

std::optional<TransferError> Engine::begin(LinkState& ls, NodeId from, NodeId to, const TransferRequest& r) {
  if (ls.busy) return TransferError::LinkBusy;
  if (auto err = validate(ls, from, to, r, true)) {
    if (*err == TransferError::BufferFull) ++stats_.buffer_full;
    return err;
  }
  NodeState& s = world_.nodes[from];
  Message& m = *s.buffer.find(r.msg);
  TransferJob job;
  job.seq = seq_;
  job.link = ls.link.id;
  job.sender = from;
  job.receiver = to;
  job.message = m;
  job.copies_to_receiver = std::clamp(r.copies_to_receiver, 1, std::max(1, m.copies_remaining));
  job.sender_copy = r.sender_copy;
  if (job.sender_copy == SenderCopy::Split && m.copies_remaining <= job.copies_to_receiver) {
    job.sender_copy = SenderCopy::Release;
  }
  job.start = now_;
  job.finish = now_ + transfer_seconds(m.size_bytes, world_.bandwidth_bps);
  arriving_.insert(custody_key(m.id, to));
  // Handed-over copies stay reserved until the job ends.
  if (job.sender_copy == SenderCopy::Release) {
    releasing_.insert(custody_key(m.id, from));
  } else if (job.sender_copy == SenderCopy::Split) {
    m.copies_remaining -= job.copies_to_receiver;
  }
  // The radio is keyed now: the send is paid for even if the contact breaks.
  debit(from, EnergyEventKind::Tx);
  ls.busy = true;
  ls.job = job.seq;
  ls.free_at = job.finish;
  schedule({job.finish, QKind::TransferComplete, from, r.msg, 0, job.seq});
  jobs_.emplace(job.seq, std::move(job));
  return std::nullopt;
}

void Engine::abort_job(LinkState& ls, TransferError cause) {
  auto it = jobs_.find(ls.job);
  ls.busy = false;
  if (it == jobs_.end()) return;
  TransferJob job = std::move(it->second);
  jobs_.erase(it);
  ++stats_.aborted;
  settle_custody(job, false);
  log_.add({now_, EventKind::TransferAbort, reason_for(cause), job.receiver, job.sender, job.message.id,
            job.message.size_bytes});
  router_.on_transfer_aborted(job, cause, now_);
}

void Engine::settle_custody(const TransferJob& job, bool transferred) {
  const MessageId id = job.message.id;
  NodeState& s = world_.nodes[job.sender];
  arriving_.erase(custody_key(id, job.receiver));
  if (job.sender_copy == SenderCopy::Release) {
    releasing_.erase(custody_key(id, job.sender));
    if (transferred && s.buffer.erase(id)) --live_.at(id);
  } else if (job.sender_copy == SenderCopy::Split && !transferred) {
    if (Message* held = s.buffer.find(id)) held->copies_remaining += job.copies_to_receiver;
  }
}

void Engine::complete_transfer(std::uint64_t seq) {
  auto it = jobs_.find(seq);
  if (it == jobs_.end()) return;  // aborted earlier
  TransferJob job = std::move(it->second);
  jobs_.erase(it);
  LinkState* ls = find_link(job.sender, job.receiver);
  if (ls && ls->job == seq) {
    ls->busy = false;
    to_poll_.insert(key(job.sender, job.receiver));
  }

  NodeState& d = world_.nodes[job.receiver];
  const MessageId id = job.message.id;
  const std::int64_t bytes = job.message.size_bytes;

  if (!d.alive || !d.energy.can_afford(EnergyEventKind::Rx)) {
    ++stats_.aborted;
    settle_custody(job, false);
    log_.add({now_, EventKind::TransferAbort, DropReason::NodeDead, job.receiver, job.sender, id, bytes});
    router_.on_transfer_aborted(job, TransferError::NodeDead, now_);
    return;
  }
  const bool to_destination = job.message.dst_node == job.receiver;
  if (!to_destination && !d.buffer.contains(id) && !d.acks.acked(id) && !d.spec.malicious &&
      !job.message.expired(now_) && !d.buffer.has_room(job.message.size_bytes)) {
    router_.make_room(job.receiver, job.message.size_bytes, now_);
    if (!d.buffer.has_room(job.message.size_bytes)) {
      ++stats_.aborted;
      ++stats_.buffer_full;
      settle_custody(job, false);
      log_.add({now_, EventKind::TransferAbort, DropReason::Overflow, job.receiver, job.sender, id, bytes});
      router_.on_transfer_done(job, TransferOutcome::Rejected, now_);
      return;
    }
  }

  debit(job.receiver, EnergyEventKind::Rx);
  ++stats_.relayed;
  log_.add({now_, EventKind::TransferComplete, DropReason::None, job.receiver, job.sender, id, bytes});

  // Sender copy bookkeeping happens first so a delivery ack can purge what is left.
  settle_custody(job, true);

  TransferOutcome outcome;
  if (job.message.expired(now_)) {
    outcome = TransferOutcome::Expired;
    log_.add({now_, EventKind::MessageDropped, DropReason::Ttl, job.receiver, job.sender, id, bytes});
  } else if (to_destination) {
    if (!delivered_[id]) {
      delivered_[id] = 1;
      ++stats_.delivered;
      const auto hops = static_cast<std::int64_t>(job.message.hop_trace.size());
      log_.add({now_, EventKind::MessageDelivered, DropReason::None, job.receiver, job.sender, id, hops});
      Delivery rec{id, now_, job.message.hop_trace};
      rec.trace.push_back(job.receiver);
      deliveries_.push_back(std::move(rec));
      outcome = TransferOutcome::Delivered;
    } else {
      outcome = TransferOutcome::Duplicate;
    }
    add_ack(job.receiver, id);
    add_ack(job.sender, id);
  } else if (d.buffer.contains(id) || d.acks.acked(id)) {
    outcome = TransferOutcome::Duplicate;
  } else if (d.spec.malicious) {
    outcome = TransferOutcome::Blackholed;
    log_.add({now_, EventKind::MessageDropped, DropReason::Blackhole, job.receiver, job.sender, id, bytes});
  } else {
    Message copy = job.message;
    copy.hop_trace.push_back(job.receiver);
    copy.copies_remaining = job.copies_to_receiver;
    copy.received_at = now_;
    insert_copy(job.receiver, std::move(copy));
    outcome = TransferOutcome::Stored;
  }
  router_.on_transfer_done(job, outcome, now_);
  if (outcome == TransferOutcome::Stored) {
    router_.on_message_added(job.receiver, id, now_);
    kick(job.receiver);
  }
}

void Engine::poll(LinkState& ls) {
  if (ls.busy) return;
  const NodeId ends[2] = {ls.link.a, ls.link.b};
  while (!ls.pushed.empty()) {
    const Queued q = ls.pushed.front();
    ls.pushed.pop_front();
    if (auto err = begin(ls, q.from, q.to, q.request)) {
      router_.on_refused(ls.link, q.from, q.to, q.request, *err, now_);
      continue;
    }
    return;
  }
  int idle_answers = 0;
  for (int guard = 0; guard < 1'000'000; ++guard) {
    if (idle_answers >= 2) return;
    const int dir = ls.next_dir;
    ls.next_dir ^= 1;
    const NodeId from = ends[dir];
    const NodeId to = ends[dir ^ 1];
    if (!world_.nodes[from].alive || !world_.nodes[to].alive) return;
    auto req = router_.next_transfer(ls.link, from, to, now_);
    if (!req) {
      ++idle_answers;
      continue;
    }
    idle_answers = 0;
    if (auto err = begin(ls, from, to, *req)) {
      router_.on_refused(ls.link, from, to, *req, *err, now_);
      continue;
    }
    return;
  }
  throw std::logic_error("router keeps offering refused transfers");
}

void Engine::settle() {
  if (settling_) return;
  settling_ = true;
  while (!to_poll_.empty() || !dying_.empty()) {
    while (!dying_.empty()) {
      const NodeId n = dying_.back();
      dying_.pop_back();
      kill(n);
    }
    if (to_poll_.empty()) break;
    const std::uint64_t k = *to_poll_.begin();
    to_poll_.erase(to_poll_.begin());
    auto it = links_.find(k);
    if (it != links_.end()) poll(it->second);
  }
  settling_ = false;
}

void Engine::debit(NodeId node, EnergyEventKind kind, double seconds) {
  NodeState& n = world_.nodes[node];
  n.energy.account(kind, seconds);
  if (n.alive && n.energy.depleted()) dying_.push_back(node);
}

void Engine::kill(NodeId node) {
  NodeState& n = world_.nodes[node];
  if (!n.alive) return;
  n.alive = false;
  log_.add({now_, EventKind::NodeDead, DropReason::None, node, kNoNode, 0, 0});
  const std::vector<NodeId> peers = adjacency_[node];
  for (NodeId p : peers) close_contact(node, p, TransferError::NodeDead);
}

void Engine::reap_expired() {
  while (expiry_next_ < expiry_order_.size()) {
    const MessageId id = expiry_order_[expiry_next_];
    const MessageCreation& c = world_.traffic[id];
    if (!(now_ - c.time > world_.ttl)) break;
    ++expiry_next_;
    if (live_[id] == 0) continue;
    for (NodeState& n : world_.nodes) {
      if (n.buffer.contains(id)) drop(n.id(), id, DropReason::Ttl);
    }
  }
}

}  // namespace aziza
