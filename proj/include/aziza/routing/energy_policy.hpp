#pragma once

namespace aziza {

struct EnergyPolicy {
  double alpha = 0.5;
  double beta_energy = 0.3;
  double gamma_cost = 0.2;
  /// Joules that normalize the transmission cost term.
  double e_tx_ref = 0.25;
  double theta_relay = 0.3;
  double eta = 0.5;
};

/// alpha * p_k + beta * energy_fraction - gamma * e_tx / e_tx_ref
double relay_utility(double p_k, double energy_fraction, double e_tx, const EnergyPolicy& policy);

/// A vehicle or UAV relay is engaged for a message iff its utility beats
/// theta_relay and the message is urgent enough.
bool relay_eligible(double utility, double urgency, const EnergyPolicy& policy);

}  // namespace aziza
