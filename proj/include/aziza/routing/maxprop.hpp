#pragma once

#include <vector>

#include "aziza/routing/queue_router.hpp"

namespace aziza {

struct MaxPropParams {
  /// Messages with fewer hops than this go first, ascending by hop count.
  int hop_threshold = 3;
};

/// Meeting probabilities by incremental averaging: on meeting k, f(k) += 1 and
/// the vector is renormalized to sum to one. Starts empty (all zero).
class MeetingVector {
 public:
  MeetingVector() = default;
  explicit MeetingVector(std::size_t nodes) : f_(nodes, 0.0) {}

  void meet(NodeId peer);
  double get(NodeId n) const { return f_.at(n); }
  const std::vector<double>& values() const { return f_; }

 private:
  std::vector<double> f_;
};

/// MaxProp: replication ordered by hop count then by estimated path cost
/// (sum of 1 - f along the cheapest path through known meeting vectors);
/// eviction removes the highest-cost message first.
class MaxPropRouter : public QueueRouter {
 public:
  explicit MaxPropRouter(MaxPropParams params = {}) : params_(params) {}
  std::string_view name() const override { return "maxprop"; }
  void attach(Engine& engine) override;
  void make_room(NodeId node, std::uint64_t bytes, double now) override;

  const MeetingVector& vector_of(NodeId n) const { return known_.at(n).at(n); }
  /// Cheapest path cost from `n` to every node using n's current knowledge.
  std::vector<double> path_costs(NodeId n) const;

 protected:
  void exchange(const Link& link, double now) override;
  std::vector<MessageId> order(NodeId from, NodeId to, double now) override;
  std::optional<TransferRequest> decide(const Link& link, NodeId from, NodeId to, const Message& m,
                                        double now) override;

 private:
  MaxPropParams params_;
  /// known_[n][k]: n's latest copy of k's meeting vector and its version.
  std::vector<std::vector<MeetingVector>> known_;
  std::vector<std::vector<std::uint64_t>> version_;
};

}  // namespace aziza
