#include "aziza/routing/maxprop.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <tuple>

namespace aziza {

void MeetingVector::meet(NodeId peer) {
  f_.at(peer) += 1.0;
  const double total = std::accumulate(f_.begin(), f_.end(), 0.0);
  for (double& v : f_) v /= total;
}

void MaxPropRouter::attach(Engine& engine) {
  QueueRouter::attach(engine);
  const std::size_t n = node_count();
  known_.assign(n, std::vector<MeetingVector>(n, MeetingVector(n)));
  version_.assign(n, std::vector<std::uint64_t>(n, 0));
}

void MaxPropRouter::exchange(const Link& link, double) {
  const NodeId a = link.a;
  const NodeId b = link.b;
  known_[a][a].meet(b);
  ++version_[a][a];
  known_[b][b].meet(a);
  ++version_[b][b];
  for (std::size_t k = 0; k < known_.size(); ++k) {
    if (version_[b][k] > version_[a][k]) {
      known_[a][k] = known_[b][k];
      version_[a][k] = version_[b][k];
    } else if (version_[a][k] > version_[b][k]) {
      known_[b][k] = known_[a][k];
      version_[b][k] = version_[a][k];
    }
  }
}

std::vector<double> MaxPropRouter::path_costs(NodeId n) const {
  const std::size_t count = known_.size();
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(count, inf);
  std::vector<char> done(count, 0);
  dist[n] = 0.0;
  // Dense Dijkstra: the node count is small.
  for (std::size_t iter = 0; iter < count; ++iter) {
    NodeId u = kNoNode;
    for (std::size_t v = 0; v < count; ++v) {
      if (!done[v] && dist[v] < inf && (u == kNoNode || dist[v] < dist[u])) u = static_cast<NodeId>(v);
    }
    if (u == kNoNode) break;
    done[u] = 1;
    const std::vector<double>& f = known_[n][u].values();
    for (std::size_t v = 0; v < count; ++v) {
      if (f[v] <= 0.0 || done[v]) continue;
      const double c = dist[u] + (1.0 - f[v]);
      if (c < dist[v]) dist[v] = c;
    }
  }
  return dist;
}

std::vector<MessageId> MaxPropRouter::order(NodeId from, NodeId to, double) {
  const std::vector<double> cost = path_costs(from);
  struct Key {
    int group;
    double rank;
    double received;
    MessageId id;
  };
  std::vector<Key> keys;
  for (const Message& m : world().node(from).buffer.messages()) {
    const int hops = m.hop_count();
    if (m.dst_node == to) {
      keys.push_back({0, 0.0, m.received_at, m.id});
    } else if (hops < params_.hop_threshold) {
      keys.push_back({1, static_cast<double>(hops), m.received_at, m.id});
    } else {
      keys.push_back({2, cost[m.dst_node], m.received_at, m.id});
    }
  }
  std::sort(keys.begin(), keys.end(), [](const Key& x, const Key& y) {
    return std::tie(x.group, x.rank, x.received, x.id) < std::tie(y.group, y.rank, y.received, y.id);
  });
  std::vector<MessageId> out;
  out.reserve(keys.size());
  for (const Key& k : keys) out.push_back(k.id);
  return out;
}

std::optional<TransferRequest> MaxPropRouter::decide(const Link&, NodeId, NodeId, const Message& m, double) {
  return TransferRequest{m.id, 1, SenderCopy::Keep};
}

void MaxPropRouter::make_room(NodeId node, std::uint64_t bytes, double) {
  NodeState& n = engine_->world().node(node);
  if (n.buffer.has_room(bytes)) return;
  const std::vector<double> cost = path_costs(node);
  while (!n.buffer.has_room(bytes) && !n.buffer.empty()) {
    // Highest cost among messages past the hop threshold; failing that, the most-travelled one.
    const Message* victim = nullptr;
    auto worse = [&](const Message& x, const Message& y) {
      const bool xh = x.hop_count() >= params_.hop_threshold;
      const bool yh = y.hop_count() >= params_.hop_threshold;
      if (xh != yh) return xh;
      if (xh) {
        if (cost[x.dst_node] != cost[y.dst_node]) return cost[x.dst_node] > cost[y.dst_node];
      } else if (x.hop_count() != y.hop_count()) {
        return x.hop_count() > y.hop_count();
      }
      return x.received_at < y.received_at;
    };
    for (const Message& m : n.buffer.messages()) {
      if (!victim || worse(m, *victim)) victim = &m;
    }
    engine_->drop(node, victim->id, DropReason::Overflow);
  }
}

}  // namespace aziza
