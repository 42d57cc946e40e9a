#pragma once

#include <cstdint>

namespace aziza {

/// Per-message and per-second radio energy costs, in joules.
struct EnergyCosts {
  double tx_j = 0.25;
  double rx_j = 0.15;
  double idle_j_per_s = 0.05;
};

enum class EnergyEventKind { Tx, Rx, Idle };

/// Battery model with a closed ledger.
///
/// Amounts are held as integer micro-joules so that
/// capacity - residual == tx_count*tx + rx_count*rx + idle exactly.
class EnergyMeter {
 public:
  EnergyMeter() = default;
  EnergyMeter(double capacity_j, const EnergyCosts& costs);

  /// Debits one event. Tx and Rx are refused (returns false, nothing debited)
  /// when the residual cannot cover the full cost. Idle debits clamp at zero.
  bool account(EnergyEventKind kind, double idle_seconds = 0.0);

  bool can_afford(EnergyEventKind kind) const;
  bool depleted() const { return residual_uj_ == 0; }

  double residual_j() const { return static_cast<double>(residual_uj_) * 1e-6; }
  double capacity_j() const { return static_cast<double>(capacity_uj_) * 1e-6; }
  double consumed_j() const { return static_cast<double>(capacity_uj_ - residual_uj_) * 1e-6; }
  double fraction() const {
    return capacity_uj_ == 0 ? 0.0 : static_cast<double>(residual_uj_) / static_cast<double>(capacity_uj_);
  }

  std::int64_t residual_uj() const { return residual_uj_; }
  std::int64_t capacity_uj() const { return capacity_uj_; }
  std::int64_t consumed_uj() const { return capacity_uj_ - residual_uj_; }
  std::int64_t tx_cost_uj() const { return tx_uj_; }
  std::int64_t rx_cost_uj() const { return rx_uj_; }
  std::int64_t idle_uj_per_s() const { return idle_uj_per_s_; }

  std::uint64_t tx_count() const { return tx_count_; }
  std::uint64_t rx_count() const { return rx_count_; }
  std::int64_t idle_uj() const { return idle_uj_; }
  double idle_seconds() const;

  /// tx_count*tx + rx_count*rx + idle, in micro-joules.
  std::int64_t ledger_uj() const;

 private:
  std::int64_t capacity_uj_ = 0;
  std::int64_t residual_uj_ = 0;
  std::int64_t tx_uj_ = 0;
  std::int64_t rx_uj_ = 0;
  std::int64_t idle_uj_per_s_ = 0;
  std::uint64_t tx_count_ = 0;
  std::uint64_t rx_count_ = 0;
  std::int64_t idle_uj_ = 0;
};

std::int64_t to_micro_joules(double joules);

}  // namespace aziza
