#pragma once

#include <vector>

#include "aziza/routing/queue_router.hpp"

namespace aziza {

struct ProphetParams {
  double p_init = 0.75;
  double beta = 0.25;
  double gamma = 0.98;
  double aging_interval = 30.0;
};

/// Per-node delivery predictabilities toward every other node.
class Predictability {
 public:
  Predictability() = default;
  Predictability(std::size_t nodes, const ProphetParams& params) : p_(nodes, 0.0), params_(params) {}

  double get(NodeId n) const { return p_.at(n); }
  void set(NodeId n, double v) { p_.at(n) = v; }
  const std::vector<double>& values() const { return p_; }

  /// Multiplies every entry by gamma^(elapsed / interval).
  void age(double now);
  /// P(peer) <- P + (1 - P) * p_init.
  void encounter(NodeId peer);
  /// P(c) <- max(P(c), P(peer) * P_peer(c) * beta) for every c other than self.
  void transitive(NodeId self, NodeId peer, const std::vector<double>& peer_values);

 private:
  std::vector<double> p_;
  ProphetParams params_;
  double last_aged_ = 0.0;
};

/// PRoPHET with the GRTR strategy: replicate to peers with higher predictability for the destination.
class ProphetRouter : public QueueRouter {
 public:
  explicit ProphetRouter(ProphetParams params = {}) : params_(params) {}
  std::string_view name() const override { return "prophet"; }
  void attach(Engine& engine) override;
  void make_room(NodeId node, std::uint64_t bytes, double now) override;

  const Predictability& table(NodeId n) const { return tables_.at(n); }

 protected:
  void exchange(const Link& link, double now) override;
  std::optional<TransferRequest> decide(const Link& link, NodeId from, NodeId to, const Message& m,
                                        double now) override;

 private:
  ProphetParams params_;
  std::vector<Predictability> tables_;
};

}  // namespace aziza
