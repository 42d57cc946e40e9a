#include "aziza/classifier/dataset.hpp"

#include <cmath>

#include "aziza/core/message.hpp"
#include "aziza/core/rng.hpp"

namespace aziza {

Dataset generate_dataset(const DatasetPriors& priors, std::size_t n, std::uint64_t seed) {
  RngStream rng(seed, "classifier");
  Dataset d;
  d.features.reserve(n);
  d.message_bytes.reserve(n);
  d.labels.reserve(n);
  d.rows.reserve(n);
  const auto& mix = priors.priority_mix;
  for (std::size_t i = 0; i < n; ++i) {
    FeatureVector f;
    f.p_i = std::pow(rng.uniform(), priors.prob_shape);
    f.p_k = std::pow(rng.uniform(), priors.prob_shape);
    f.trust = rng.uniform();
    f.buffer_free = rng.uniform(0.0, priors.buffer_max);
    f.energy_max = priors.energy_max;
    f.energy = rng.uniform(0.0, priors.energy_max);
    f.delta_t = rng.uniform(0.0, priors.delta_t_max);
    const double u = rng.uniform();
    const Priority p = u < mix[0] ? Priority::Critical : (u < mix[0] + mix[1] ? Priority::Important : Priority::Routine);
    f.urgency = urgency_of(p);
    const double bytes = rng.uniform(priors.size_min, priors.size_max);
    d.features.push_back(f);
    d.message_bytes.push_back(bytes);
    d.labels.push_back(decide_closed_form(f, priors.thresholds, bytes));
    d.rows.push_back(f.as_array());
  }
  return d;
}

}  // namespace aziza
