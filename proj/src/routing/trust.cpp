#include "aziza/routing/trust.hpp"

#include <algorithm>
#include <cmath>

namespace aziza {

double decay(double t, double dt, double lambda) {
  if (dt <= 0.0) return t;
  return std::max(0.0, t * std::exp(-lambda * dt));
}

TrustTable::Entry& TrustTable::touch(NodeId peer, double now, double initial) {
  auto [it, fresh] = entries_.try_emplace(peer, Entry{std::clamp(initial, 0.0, 1.0), now});
  Entry& e = it->second;
  if (!fresh && now > e.updated) {
    e.score = decay(e.score, now - e.updated, params_.lambda);
    e.updated = now;
  }
  return e;
}

double TrustTable::score(NodeId peer, double now, double initial) { return touch(peer, now, initial).score; }

double TrustTable::adjust(NodeId peer, double delta, double now, double initial) {
  Entry& e = touch(peer, now, initial);
  const double before = e.score;
  e.score = std::clamp(e.score + delta, 0.0, 1.0);
  return e.score - before;
}

double TrustTable::reward(NodeId peer, double now, double initial) {
  return adjust(peer, params_.delta_plus, now, initial);
}

double TrustTable::penalize(NodeId peer, double now, double initial, double weight) {
  return adjust(peer, -params_.delta_minus * weight, now, initial);
}

bool TrustTable::blacklisted(NodeId peer, double now, double initial) {
  return score(peer, now, initial) < params_.theta_black;
}

}  // namespace aziza
