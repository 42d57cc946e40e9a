#include "aziza/classifier/cross_validation.hpp"

#include <numeric>
#include <stdexcept>

#include "aziza/core/rng.hpp"

namespace aziza {

std::vector<int> stratified_folds(const std::vector<Action>& labels, int k, std::uint64_t seed) {
  if (k < 2) throw std::invalid_argument("need at least two folds");
  RngStream rng(seed, "folds");
  std::vector<int> fold(labels.size(), 0);
  int next = 0;
  for (std::size_t cls = 0; cls < kActionCount; ++cls) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (static_cast<std::size_t>(labels[i]) == cls) members.push_back(i);
    }
    for (std::size_t i = members.size(); i > 1; --i) {
      std::swap(members[i - 1], members[rng.index(i)]);
    }
    // Continue the deal where the previous class stopped so fold sizes stay balanced.
    for (std::size_t i : members) {
      fold[i] = next;
      next = (next + 1) % k;
    }
  }
  return fold;
}

CrossValidation cross_validate(const Dataset& data, const std::vector<TreeParams>& grid, int k, std::uint64_t seed) {
  if (grid.empty()) throw std::invalid_argument("empty hyperparameter grid");
  const std::vector<int> fold = stratified_folds(data.labels, k, seed);
  CrossValidation cv;
  for (const TreeParams& p : grid) {
    GridResult r;
    r.params = p;
    for (int f = 0; f < k; ++f) {
      std::vector<FeatureRow> tx, vx;
      std::vector<Action> ty, vy;
      for (std::size_t i = 0; i < data.size(); ++i) {
        if (fold[i] == f) {
          vx.push_back(data.rows[i]);
          vy.push_back(data.labels[i]);
        } else {
          tx.push_back(data.rows[i]);
          ty.push_back(data.labels[i]);
        }
      }
      const DecisionTree t = train_tree(tx, ty, p);
      r.fold_accuracy.push_back(accuracy(t, vx, vy));
    }
    r.mean_accuracy = std::accumulate(r.fold_accuracy.begin(), r.fold_accuracy.end(), 0.0) / k;
    cv.grid.push_back(r);
  }
  for (std::size_t i = 1; i < cv.grid.size(); ++i) {
    const GridResult& c = cv.grid[i];
    const GridResult& b = cv.grid[cv.selected];
    const bool better = c.mean_accuracy > b.mean_accuracy ||
                        (c.mean_accuracy == b.mean_accuracy &&
                         (c.params.max_depth < b.params.max_depth ||
                          (c.params.max_depth == b.params.max_depth && c.params.min_samples_leaf > b.params.min_samples_leaf)));
    if (better) cv.selected = i;
  }
  return cv;
}

std::vector<TreeParams> default_grid() {
  std::vector<TreeParams> g;
  for (int d : {3, 4, 5}) {
    for (int l : {5, 10}) g.push_back({d, l});
  }
  return g;
}

}  // namespace aziza
