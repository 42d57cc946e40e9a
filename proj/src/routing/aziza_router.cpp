#include "aziza/routing/aziza_router.hpp"

#include <cstdio>
#include <ostream>

namespace aziza {

namespace {

std::uint64_t pending_key(NodeId from, NodeId to, MessageId m) {
  return (static_cast<std::uint64_t>(m) << 32) | (static_cast<std::uint64_t>(from & 0xFFFF) << 16) | (to & 0xFFFF);
}

bool is_ferry(const NodeState& n) { return n.spec.cls == NodeClass::Vehicle || n.spec.cls == NodeClass::UAV; }

}  // namespace

AzizaRouter::AzizaRouter(AzizaParams params) : params_(std::move(params)) {}

void AzizaRouter::attach(Engine& engine) {
  QueueRouter::attach(engine);
  const std::size_t n = node_count();
  const std::size_t z = world().routing_zones.size();
  zones_.assign(n, ZoneProbTable(z, params_.zone));
  trust_.assign(n, TrustTable(params_.trust));
  last_zone_.assign(n, kNoZone);
  met_.assign(n, std::vector<double>(n, -1.0));
  ledger_.assign(n, {});
  pending_.clear();
  gap_.clear();
  decisions_.clear();
  next_scan_ = params_.timeout_scan;
  for (NodeId i = 0; i < n; ++i) {
    last_zone_[i] = world().node(i).zone;
    zones_[i].age_to(0.0, last_zone_[i]);
  }
}

double AzizaRouter::initial_trust(NodeId peer) const { return world().node(peer).spec.initial_trust; }

double AzizaRouter::trust(NodeId n, NodeId peer, double now) {
  if (!params_.trust_enabled) return 1.0;
  return trust_.at(n).score(peer, now, initial_trust(peer));
}

bool AzizaRouter::blacklisted(NodeId n, NodeId peer, double now) {
  if (!params_.trust_enabled) return false;
  return trust_.at(n).blacklisted(peer, now, initial_trust(peer));
}

ZoneMode AzizaRouter::mode(NodeId carrier, const Message& m) const {
  return world().node(carrier).zone == m.dst_zone ? ZoneMode::IntraZone : ZoneMode::InterZone;
}

void AzizaRouter::on_tick(double now) {
  // Keep the occupied zone pinned so a carrier's table remembers where it has been.
  for (NodeId i = 0; i < zones_.size(); ++i) {
    const ZoneId z = world().node(i).zone;
    if (z != last_zone_[i]) {
      zones_[i].age_to(now, last_zone_[i]);
      zones_[i].age_to(now, z);
      last_zone_[i] = z;
    }
  }
  if (params_.trust_enabled && now >= next_scan_) {
    timeout_scan(now);
    next_scan_ = now + params_.timeout_scan;
  }
}

void AzizaRouter::timeout_scan(double now) {
  const double ttl = world().ttl;
  for (NodeId i = 0; i < ledger_.size(); ++i) {
    auto& book = ledger_[i];
    for (auto it = book.begin(); it != book.end();) {
      auto& entries = it->second;
      for (LedgerEntry& e : entries) {
        if (!e.penalized && now > e.deadline) {
          trust_[i].penalize(e.peer, now, initial_trust(e.peer), params_.trust.soft_weight);
          e.penalized = true;
        }
      }
      // Penalized entries linger one more TTL so a late ack can still be credited.
      std::erase_if(entries, [&](const LedgerEntry& e) { return e.penalized && now > e.deadline + ttl; });
      it = entries.empty() ? book.erase(it) : std::next(it);
    }
  }
}

void AzizaRouter::exchange(const Link& link, double now) {
  const NodeId a = link.a;
  const NodeId b = link.b;
  zones_[a].age_to(now, world().node(a).zone);
  zones_[b].age_to(now, world().node(b).zone);
  const std::vector<double> pa = zones_[a].values();
  const std::vector<double> pb = zones_[b].values();
  zones_[a].absorb(pb);
  zones_[b].absorb(pa);
  // Re-pin: absorbing cannot lower a pinned 1, but keep the invariant explicit.
  zones_[a].age_to(now, world().node(a).zone);
  zones_[b].age_to(now, world().node(b).zone);

  const double prev = met_[a][b];
  gap_[link.id] = prev < 0.0 ? now : now - prev;
  met_[a][b] = now;
  met_[b][a] = now;
}

void AzizaRouter::on_contact_close(const Link& link, double now) {
  QueueRouter::on_contact_close(link, now);
  gap_.erase(link.id);
}

void AzizaRouter::record(double now, NodeId i, NodeId j, MessageId m, const FeatureVector* f, std::string_view gate,
                         std::string_view action) {
  if (!params_.record_decisions) return;
  DecisionRecord r;
  r.time = now;
  r.i = i;
  r.j = j;
  r.msg = m;
  r.has_features = f != nullptr;
  if (f) r.features = *f;
  r.gate = gate;
  r.action = action;
  decisions_.push_back(r);
}

bool AzizaRouter::relay_ok(NodeId from, NodeId to, const Message& m, double p_k) const {
  const NodeState& peer = world().node(to);
  if (!is_ferry(peer)) return true;
  const double u = relay_utility(p_k, peer.energy.fraction(), world().node(from).spec.costs.tx_j, params_.energy);
  return relay_eligible(u, m.urgency, params_.energy);
}

std::optional<TransferRequest> AzizaRouter::forward(NodeId from, NodeId to, const Message& m, int copies,
                                                    SenderCopy how, double now) {
  if (params_.trust_enabled) {
    const double applied = trust_[from].reward(to, now, initial_trust(to));
    pending_[pending_key(from, to, m.id)] = applied;
    ledger_[from][m.id].push_back({to, now, m.deadline(), false});
  }
  return TransferRequest{m.id, copies, how};
}

std::optional<TransferRequest> AzizaRouter::decide(const Link& link, NodeId from, NodeId to, const Message& m,
                                                   double now) {
  const NodeState& peer = world().node(to);
  if (m.dst_node == to) {
    record(now, from, to, m.id, nullptr, "direct", "forward");
    return TransferRequest{m.id, 1, SenderCopy::Keep};
  }
  const ZoneId dz = m.dst_zone;

  if (mode(from, m) == ZoneMode::IntraZone) {
    if (blacklisted(from, to, now)) {
      record(now, from, to, m.id, nullptr, "blacklisted", "skip");
      return std::nullopt;
    }
    if (m.copies_remaining <= 1 || peer.zone != dz) {
      record(now, from, to, m.id, nullptr, "intra_wait", "hold");
      return std::nullopt;
    }
    if (peer.buffer.free_bytes() < m.size_bytes) {
      record(now, from, to, m.id, nullptr, "buffer_gate", "hold");
      return std::nullopt;
    }
    const double p_k = zones_[to].get(dz);
    if (!relay_ok(from, to, m, p_k)) {
      record(now, from, to, m.id, nullptr, "relay_gate", "hold");
      return std::nullopt;
    }
    record(now, from, to, m.id, nullptr, "intra_spray", "forward");
    return forward(from, to, m, m.copies_remaining / 2, SenderCopy::Split, now);
  }

  if (blacklisted(from, to, now)) {
    record(now, from, to, m.id, nullptr, "blacklisted", "skip");
    return std::nullopt;
  }
  zones_[from].age_to(now, world().node(from).zone);
  zones_[to].age_to(now, peer.zone);
  const double p_i = zones_[from].get(dz);
  const double p_k = zones_[to].get(dz);
  if (p_k <= p_i) {
    record(now, from, to, m.id, nullptr, "p_gate", "hold");
    return std::nullopt;
  }

  FeatureVector f;
  f.p_i = p_i;
  f.p_k = p_k;
  f.trust = trust(from, to, now);
  f.buffer_free = static_cast<double>(peer.buffer.free_bytes());
  f.energy = peer.energy.residual_j();
  f.energy_max = peer.energy.capacity_j();
  auto gap = gap_.find(link.id);
  f.delta_t = gap == gap_.end() ? 0.0 : gap->second;
  f.urgency = m.urgency;

  const Action act = params_.model.decide(f, m.size_bytes);
  if (act == Action::Drop) {
    record(now, from, to, m.id, &f, "classifier", "drop");
    const MessageId id = m.id;
    engine().drop(from, id, DropReason::Routing);
    if (params_.trust_enabled) trust_[from].penalize(to, now, initial_trust(to));
    return std::nullopt;
  }
  if (act == Action::Hold) {
    record(now, from, to, m.id, &f, "classifier", "hold");
    return std::nullopt;
  }
  if (peer.buffer.free_bytes() < m.size_bytes) {
    record(now, from, to, m.id, &f, "buffer_gate", "hold");
    return std::nullopt;
  }
  if (!relay_ok(from, to, m, p_k)) {
    record(now, from, to, m.id, &f, "relay_gate", "hold");
    return std::nullopt;
  }
  record(now, from, to, m.id, &f, "classifier", "forward");
  return forward(from, to, m, m.copies_remaining, SenderCopy::Release, now);
}

void AzizaRouter::rollback(const TransferJob& job, double now) {
  auto it = pending_.find(pending_key(job.sender, job.receiver, job.message.id));
  if (it == pending_.end()) return;
  trust_[job.sender].adjust(job.receiver, -it->second, now, initial_trust(job.receiver));
  pending_.erase(it);
  auto book = ledger_[job.sender].find(job.message.id);
  if (book != ledger_[job.sender].end()) {
    auto& v = book->second;
    for (auto e = v.rbegin(); e != v.rend(); ++e) {
      if (e->peer == job.receiver) {
        v.erase(std::next(e).base());
        break;
      }
    }
    if (v.empty()) ledger_[job.sender].erase(book);
  }
}

void AzizaRouter::on_transfer_done(const TransferJob& job, TransferOutcome outcome, double now) {
  if (outcome == TransferOutcome::Rejected) {
    rollback(job, now);
    return;
  }
  pending_.erase(pending_key(job.sender, job.receiver, job.message.id));
}

void AzizaRouter::on_transfer_aborted(const TransferJob& job, TransferError, double now) { rollback(job, now); }

void AzizaRouter::on_refused(const Link&, NodeId from, NodeId to, const TransferRequest& req, TransferError,
                             double now) {
  TransferJob job;
  job.sender = from;
  job.receiver = to;
  job.message.id = req.msg;
  rollback(job, now);
}

void AzizaRouter::on_acks_learned(NodeId node, const IdSet& ids, double now) {
  auto& book = ledger_.at(node);
  if (book.empty()) return;
  ids.for_each([&](MessageId id) {
    auto it = book.find(id);
    if (it == book.end()) return;
    if (params_.trust_enabled) {
      for (const LedgerEntry& e : it->second) trust_[node].reward(e.peer, now, initial_trust(e.peer));
    }
    book.erase(it);
  });
}

void AzizaRouter::write_decisions(std::ostream& out) const {
  char buf[512];
  for (const DecisionRecord& r : decisions_) {
    int n = std::snprintf(buf, sizeof buf, "{\"t\":%.6f,\"i\":%u,\"j\":%u,\"msg\":\"m%u\",\"gate\":\"%.*s\"", r.time,
                          r.i, r.j, r.msg, static_cast<int>(r.gate.size()), r.gate.data());
    out.write(buf, n);
    if (r.has_features) {
      const FeatureVector& f = r.features;
      n = std::snprintf(buf, sizeof buf,
                        ",\"features\":{\"p_i\":%.9g,\"p_k\":%.9g,\"trust\":%.9g,\"buffer_free\":%.0f,"
                        "\"energy\":%.6f,\"energy_max\":%.6f,\"delta_t\":%.6f,\"urgency\":%.2f}",
                        f.p_i, f.p_k, f.trust, f.buffer_free, f.energy, f.energy_max, f.delta_t, f.urgency);
      out.write(buf, n);
    }
    n = std::snprintf(buf, sizeof buf, ",\"action\":\"%.*s\"}\n", static_cast<int>(r.action.size()), r.action.data());
    out.write(buf, n);
  }
}

}  // namespace aziza
