#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace aziza {

enum class Action : std::uint8_t { Forward, Hold, Drop };

const char* to_string(Action a);
std::optional<Action> parse_action(std::string_view s);

/// Context of one (carrier i, peer k, message m) decision.
struct FeatureVector {
  double p_i = 0.0;          // P_i(Z_d)
  double p_k = 0.0;          // P_k(Z_d)
  double trust = 0.0;        // T_i(k)
  double buffer_free = 0.0;  // bytes free at k
  double energy = 0.0;       // joules left at k
  double energy_max = 1.0;   // k's battery capacity
  double delta_t = 0.0;      // seconds since i and k last met
  double urgency = 0.1;      // U_m

  static constexpr std::size_t kCount = 7;
  static constexpr std::array<std::string_view, kCount> kNames{"p_i",    "p_k",     "trust",  "buffer_free",
                                                                "energy", "delta_t", "urgency"};
  /// Model inputs in the order of kNames; energy enters as a fraction of capacity.
  std::array<double, kCount> as_array() const;
};

struct DecisionThresholds {
  double tau_p = 0.1;
  double tau_t = 0.3;
  /// tau_b is the message size, supplied per decision.
  double tau_e_frac = 0.2;
  double tau_u = 0.3;
  double tau_e_min_frac = 0.05;
};

/// Forward iff p_k > tau_p, trust > tau_t, buffer_free > message size and
/// energy > tau_e; otherwise Drop iff urgency < tau_u or energy < tau_e_min;
/// otherwise Hold.
Action decide_closed_form(const FeatureVector& f, const DecisionThresholds& t, double message_bytes);

}  // namespace aziza
