#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "aziza/classifier/cross_validation.hpp"

namespace aziza {

struct PipelineOptions {
  std::size_t n = 15'000;
  std::uint64_t seed = 42;
  int folds = 5;
  std::vector<TreeParams> grid = default_grid();
  DatasetPriors priors;
};

struct RankedFeature {
  std::string name;
  double importance = 0.0;
};

struct PipelineResult {
  std::array<std::size_t, kActionCount> label_counts{};
  CrossValidation cv;
  /// Refit on the full dataset at the selected grid point.
  DecisionTree model;
  double training_accuracy = 0.0;
  /// Descending importance; ties keep feature order.
  std::vector<RankedFeature> ranking;
};

/// Generate, cross-validate over the grid, refit the selected point.
PipelineResult run_pipeline(const PipelineOptions& options);

std::vector<RankedFeature> rank_features(const DecisionTree& tree);

std::string pipeline_report_json(const PipelineOptions& options, const PipelineResult& result);

}  // namespace aziza
