#include "aziza/routing/zone_prob.hpp"

#include <algorithm>
#include <cmath>

namespace aziza {

double transitive_gain(double p_own, double p_peer, double beta) {
  return std::min(1.0, p_own + (1.0 - p_own) * p_peer * beta);
}

double aged(double p, double elapsed, double gamma, double interval) {
  if (elapsed <= 0.0 || gamma == 1.0) return p;
  return p * std::pow(gamma, elapsed / interval);
}

ZoneProbTable::ZoneProbTable(std::size_t zones, ZoneProbParams params) : p_(zones, 0.0), params_(params) {}

void ZoneProbTable::set(ZoneId z, double v) { p_.at(z) = std::clamp(v, 0.0, 1.0); }

void ZoneProbTable::age_to(double now, ZoneId current) {
  const double elapsed = now - last_aged_;
  if (elapsed > 0.0) {
    for (double& v : p_) v = aged(v, elapsed, params_.gamma, params_.aging_interval);
    last_aged_ = now;
  }
  if (current < p_.size()) p_[current] = 1.0;
}

void ZoneProbTable::absorb(const std::vector<double>& peer) {
  for (std::size_t z = 0; z < p_.size() && z < peer.size(); ++z) {
    p_[z] = transitive_gain(p_[z], peer[z], params_.beta);
  }
}

}  // namespace aziza
