#include "aziza/routing/decision.hpp"

namespace aziza {

const char* to_string(Action a) {
  switch (a) {
    case Action::Forward: return "forward";
    case Action::Hold: return "hold";
    case Action::Drop: return "drop";
  }
  return "hold";
}

std::optional<Action> parse_action(std::string_view s) {
  if (s == "forward") return Action::Forward;
  if (s == "hold") return Action::Hold;
  if (s == "drop") return Action::Drop;
  return std::nullopt;
}

std::array<double, FeatureVector::kCount> FeatureVector::as_array() const {
  const double frac = energy_max > 0.0 ? energy / energy_max : 0.0;
  return {p_i, p_k, trust, buffer_free, frac, delta_t, urgency};
}

Action decide_closed_form(const FeatureVector& f, const DecisionThresholds& t, double message_bytes) {
  const double tau_e = t.tau_e_frac * f.energy_max;
  const double tau_e_min = t.tau_e_min_frac * f.energy_max;
  if (f.p_k > t.tau_p && f.trust > t.tau_t && f.buffer_free > message_bytes && f.energy > tau_e) {
    return Action::Forward;
  }
  if (f.urgency < t.tau_u || f.energy < tau_e_min) return Action::Drop;
  return Action::Hold;
}

}  // namespace aziza
