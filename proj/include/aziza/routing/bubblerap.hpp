#pragma once

#include <vector>

#include "aziza/routing/queue_router.hpp"

namespace aziza {

struct BubbleRapParams {
  /// Sliding window for degree centrality.
  double window = 6.0 * 3600.0;
};

/// BubbleRap with home zone as community and windowed unique-contact degree
/// as centrality. Vehicles and UAVs belong to no community.
class BubbleRapRouter : public QueueRouter {
 public:
  explicit BubbleRapRouter(BubbleRapParams params = {}) : params_(params) {}
  std::string_view name() const override { return "bubblerap"; }
  void attach(Engine& engine) override;
  void make_room(NodeId node, std::uint64_t bytes, double now) override;

  ZoneId community(NodeId n) const;
  int global_centrality(NodeId n, double now) const;
  int local_centrality(NodeId n, double now) const;

 protected:
  void exchange(const Link& link, double now) override;
  std::optional<TransferRequest> decide(const Link& link, NodeId from, NodeId to, const Message& m,
                                        double now) override;

 private:
  BubbleRapParams params_;
  /// last_seen_[n][k]: last time n met k, negative if never.
  std::vector<std::vector<double>> last_seen_;
};

}  // namespace aziza
