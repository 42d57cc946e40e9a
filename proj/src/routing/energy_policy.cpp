#include "aziza/routing/energy_policy.hpp"

namespace aziza {

double relay_utility(double p_k, double energy_fraction, double e_tx, const EnergyPolicy& policy) {
  const double cost = policy.e_tx_ref > 0.0 ? e_tx / policy.e_tx_ref : 0.0;
  return policy.alpha * p_k + policy.beta_energy * energy_fraction - policy.gamma_cost * cost;
}

bool relay_eligible(double utility, double urgency, const EnergyPolicy& policy) {
  return utility > policy.theta_relay && urgency >= policy.eta;
}

}  // namespace aziza
