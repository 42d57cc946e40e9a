#include "aziza/routing/prophet.hpp"

#include <algorithm>
#include <cmath>

namespace aziza {

void Predictability::age(double now) {
  const double elapsed = now - last_aged_;
  if (elapsed <= 0) return;
  const double k = std::pow(params_.gamma, elapsed / params_.aging_interval);
  for (double& v : p_) v *= k;
  last_aged_ = now;
}

void Predictability::encounter(NodeId peer) {
  double& v = p_.at(peer);
  v = v + (1.0 - v) * params_.p_init;
}

void Predictability::transitive(NodeId self, NodeId peer, const std::vector<double>& peer_values) {
  const double via = p_.at(peer);
  for (std::size_t c = 0; c < p_.size(); ++c) {
    if (c == self || c == peer) continue;
    p_[c] = std::max(p_[c], via * peer_values[c] * params_.beta);
  }
}

void ProphetRouter::attach(Engine& engine) {
  QueueRouter::attach(engine);
  tables_.assign(node_count(), Predictability(node_count(), params_));
}

void ProphetRouter::make_room(NodeId node, std::uint64_t bytes, double) { evict_oldest(node, bytes); }

void ProphetRouter::exchange(const Link& link, double now) {
  Predictability& a = tables_[link.a];
  Predictability& b = tables_[link.b];
  a.age(now);
  b.age(now);
  a.encounter(link.b);
  b.encounter(link.a);
  const std::vector<double> snap_a = a.values();
  const std::vector<double> snap_b = b.values();
  a.transitive(link.a, link.b, snap_b);
  b.transitive(link.b, link.a, snap_a);
}

std::optional<TransferRequest> ProphetRouter::decide(const Link&, NodeId from, NodeId to, const Message& m,
                                                     double now) {
  if (m.dst_node == to) return TransferRequest{m.id, 1, SenderCopy::Keep};
  tables_[from].age(now);
  tables_[to].age(now);
  if (tables_[to].get(m.dst_node) > tables_[from].get(m.dst_node)) return TransferRequest{m.id, 1, SenderCopy::Keep};
  return std::nullopt;
}

}  // namespace aziza
