#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "aziza/classifier/tree.hpp"
#include "aziza/routing/decision.hpp"

namespace aziza {

/// Sampling distributions for synthetic contact vectors. Trust is uniform on
/// [0, 1]; zone probabilities are u^prob_shape with u uniform on [0, 1]
/// (shape 1 is uniform); the others are uniform on [0, max].
struct DatasetPriors {
  double prob_shape = 1.0;
  double energy_max = 1.0;
  double buffer_max = 104'857'600.0;
  double delta_t_max = 6.0 * 3600.0;
  /// Probabilities of urgency 1.0, 0.5, 0.1.
  std::array<double, 3> priority_mix{0.2, 0.3, 0.5};
  /// Message sizes used as the buffer threshold when labelling.
  double size_min = 51'200.0;
  double size_max = 204'800.0;
  DecisionThresholds thresholds;
};

struct Dataset {
  std::vector<FeatureVector> features;
  std::vector<double> message_bytes;
  std::vector<Action> labels;
  /// Model inputs (FeatureVector::as_array of each row).
  std::vector<FeatureRow> rows;

  std::size_t size() const { return labels.size(); }
};

/// Rows drawn i.i.d. from the priors from stream (seed, "classifier");
/// labels come from the closed-form rule.
Dataset generate_dataset(const DatasetPriors& priors, std::size_t n, std::uint64_t seed);

}  // namespace aziza
