#pragma once

#include <vector>

#include "aziza/core/ids.hpp"

namespace aziza {

struct ZoneProbParams {
  double beta = 0.25;
  double gamma = 0.98;
  double aging_interval = 60.0;
};

/// P <- min(1, P + (1 - P) * P_peer * beta)
double transitive_gain(double p_own, double p_peer, double beta);
/// P * gamma^(elapsed / interval)
double aged(double p, double elapsed, double gamma, double interval);

/// A node's estimate of its ability to get a message into each zone.
class ZoneProbTable {
 public:
  ZoneProbTable() = default;
  ZoneProbTable(std::size_t zones, ZoneProbParams params = {});

  double get(ZoneId z) const { return p_.at(z); }
  void set(ZoneId z, double v);
  std::size_t size() const { return p_.size(); }
  const std::vector<double>& values() const { return p_; }
  const ZoneProbParams& params() const { return params_; }
  double last_aged() const { return last_aged_; }

  /// Ages every entry up to `now` and pins `current` (if valid) to 1.
  void age_to(double now, ZoneId current);
  /// Applies the transitive gain for every zone using the peer's values.
  void absorb(const std::vector<double>& peer);

 private:
  std::vector<double> p_;
  ZoneProbParams params_;
  double last_aged_ = 0.0;
};

}  // namespace aziza
