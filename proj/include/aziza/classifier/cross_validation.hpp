#pragma once

#include <cstdint>
#include <vector>

#include "aziza/classifier/dataset.hpp"
#include "aziza/classifier/tree.hpp"

namespace aziza {

/// Fold index per row. Rows of each class are shuffled with stream
/// (seed, "folds") and dealt round-robin, so every fold holds each class's
/// share to within one row.
std::vector<int> stratified_folds(const std::vector<Action>& labels, int k, std::uint64_t seed);

struct GridResult {
  TreeParams params;
  std::vector<double> fold_accuracy;
  double mean_accuracy = 0.0;
};

struct CrossValidation {
  std::vector<GridResult> grid;
  std::size_t selected = 0;

  const GridResult& best() const { return grid.at(selected); }
};

/// Mean k-fold accuracy per grid point; picks the highest mean, ties going to
/// the smaller depth, then the larger leaf size.
CrossValidation cross_validate(const Dataset& data, const std::vector<TreeParams>& grid, int k, std::uint64_t seed);

/// {3, 4, 5} x {5, 10}
std::vector<TreeParams> default_grid();

}  // namespace aziza
