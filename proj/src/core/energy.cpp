#include "aziza/core/energy.hpp"

#include <algorithm>
#include <cmath>

namespace aziza {

std::int64_t to_micro_joules(double joules) { return std::llround(joules * 1e6); }

EnergyMeter::EnergyMeter(double capacity_j, const EnergyCosts& costs)
    : capacity_uj_(to_micro_joules(capacity_j)),
      residual_uj_(capacity_uj_),
      tx_uj_(to_micro_joules(costs.tx_j)),
      rx_uj_(to_micro_joules(costs.rx_j)),
      idle_uj_per_s_(to_micro_joules(costs.idle_j_per_s)) {}

bool EnergyMeter::can_afford(EnergyEventKind kind) const {
  switch (kind) {
    case EnergyEventKind::Tx:
      return residual_uj_ > 0 && residual_uj_ >= tx_uj_;
    case EnergyEventKind::Rx:
      return residual_uj_ > 0 && residual_uj_ >= rx_uj_;
    case EnergyEventKind::Idle:
      return residual_uj_ > 0;
  }
  return false;
}

bool EnergyMeter::account(EnergyEventKind kind, double idle_seconds) {
  switch (kind) {
    case EnergyEventKind::Tx:
      if (!can_afford(kind)) return false;
      residual_uj_ -= tx_uj_;
      ++tx_count_;
      return true;
    case EnergyEventKind::Rx:
      if (!can_afford(kind)) return false;
      residual_uj_ -= rx_uj_;
      ++rx_count_;
      return true;
    case EnergyEventKind::Idle: {
      if (idle_seconds <= 0.0 || residual_uj_ == 0) return residual_uj_ > 0;
      const std::int64_t want = std::llround(static_cast<double>(idle_uj_per_s_) * idle_seconds);
      const std::int64_t take = std::min(want, residual_uj_);
      residual_uj_ -= take;
      idle_uj_ += take;
      return residual_uj_ > 0;
    }
  }
  return false;
}

double EnergyMeter::idle_seconds() const {
  return idle_uj_per_s_ == 0 ? 0.0 : static_cast<double>(idle_uj_) / static_cast<double>(idle_uj_per_s_);
}

std::int64_t EnergyMeter::ledger_uj() const {
  return static_cast<std::int64_t>(tx_count_) * tx_uj_ + static_cast<std::int64_t>(rx_count_) * rx_uj_ + idle_uj_;
}

}  // namespace aziza
