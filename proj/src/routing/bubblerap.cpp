#include "aziza/routing/bubblerap.hpp"

namespace aziza {

void BubbleRapRouter::attach(Engine& engine) {
  QueueRouter::attach(engine);
  last_seen_.assign(node_count(), std::vector<double>(node_count(), -1.0));
}

void BubbleRapRouter::make_room(NodeId node, std::uint64_t bytes, double) { evict_oldest(node, bytes); }

ZoneId BubbleRapRouter::community(NodeId n) const {
  const NodeState& s = world().node(n);
  if (s.spec.cls != NodeClass::Ground || s.spec.home_region == kNoZone) return kNoZone;
  return world().region_to_zone.at(s.spec.home_region);
}

int BubbleRapRouter::global_centrality(NodeId n, double now) const {
  int c = 0;
  for (double t : last_seen_.at(n)) {
    if (t >= 0.0 && now - t <= params_.window) ++c;
  }
  return c;
}

int BubbleRapRouter::local_centrality(NodeId n, double now) const {
  const ZoneId home = community(n);
  if (home == kNoZone) return 0;
  int c = 0;
  const auto& seen = last_seen_.at(n);
  for (std::size_t k = 0; k < seen.size(); ++k) {
    if (seen[k] >= 0.0 && now - seen[k] <= params_.window && community(static_cast<NodeId>(k)) == home) ++c;
  }
  return c;
}

void BubbleRapRouter::exchange(const Link& link, double now) {
  last_seen_[link.a][link.b] = now;
  last_seen_[link.b][link.a] = now;
}

std::optional<TransferRequest> BubbleRapRouter::decide(const Link&, NodeId from, NodeId to, const Message& m,
                                                       double now) {
  const TransferRequest copy{m.id, 1, SenderCopy::Keep};
  if (m.dst_node == to) return copy;
  const ZoneId target = community(m.dst_node);
  const bool peer_inside = target != kNoZone && community(to) == target;
  if (community(from) != target || target == kNoZone) {
    if (peer_inside || global_centrality(to, now) > global_centrality(from, now)) return copy;
    return std::nullopt;
  }
  if (peer_inside && local_centrality(to, now) > local_centrality(from, now)) return copy;
  return std::nullopt;
}

}  // namespace aziza
