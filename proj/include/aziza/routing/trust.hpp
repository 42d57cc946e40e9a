#pragma once

#include <unordered_map>

#include "aziza/core/ids.hpp"

namespace aziza {

struct TrustParams {
  double delta_plus = 0.1;
  double delta_minus = 0.3;
  /// Decay rate per second.
  double lambda = 0.01 / 3600.0;
  double theta_trust = 0.3;
  double theta_black = 0.3;
  /// Fraction of delta_minus applied when a forwarded message times out.
  double soft_weight = 0.5;
};

/// max(0, t * exp(-lambda * dt))
double decay(double t, double dt, double lambda);

/// Local trust scores with lazy exponential decay. Unknown peers start at the
/// initial trust supplied by the caller (role-based).
class TrustTable {
 public:
  TrustTable() = default;
  explicit TrustTable(TrustParams params) : params_(params) {}

  bool known(NodeId peer) const { return entries_.contains(peer); }
  /// Current decayed score; registers the peer at `initial` if unseen.
  double score(NodeId peer, double now, double initial);
  /// Adds delta_plus; returns the change actually applied after clamping.
  double reward(NodeId peer, double now, double initial);
  /// Subtracts weight * delta_minus; returns the (non-positive) applied change.
  double penalize(NodeId peer, double now, double initial, double weight = 1.0);
  /// Adds an arbitrary delta (used to undo an optimistic reward).
  double adjust(NodeId peer, double delta, double now, double initial);
  bool blacklisted(NodeId peer, double now, double initial);

  const TrustParams& params() const { return params_; }

 private:
  struct Entry {
    double score = 0.0;
    double updated = 0.0;
  };
  Entry& touch(NodeId peer, double now, double initial);

  TrustParams params_;
  std::unordered_map<NodeId, Entry> entries_;
};

}  // namespace aziza
