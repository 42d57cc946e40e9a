#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "aziza/routing/decision.hpp"

namespace aziza {

inline constexpr std::size_t kActionCount = 3;
inline constexpr std::size_t kFeatureCount = FeatureVector::kCount;
using FeatureRow = std::array<double, kFeatureCount>;

struct TreeNode {
  /// -1 for leaves.
  int feature = -1;
  double threshold = 0.0;
  int left = -1;   // taken when x[feature] <= threshold
  int right = -1;
  Action label = Action::Hold;
  std::array<std::uint32_t, kActionCount> counts{};
  int depth = 0;

  bool leaf() const { return feature < 0; }
  std::uint32_t samples() const { return counts[0] + counts[1] + counts[2]; }
};

struct TreeParams {
  int max_depth = 5;
  int min_samples_leaf = 10;
};

/// Binary CART classifier over the decision feature vector.
class DecisionTree {
 public:
  DecisionTree() = default;
  DecisionTree(TreeParams params, std::vector<TreeNode> nodes, std::array<double, kFeatureCount> importances);

  Action predict(const FeatureRow& x) const;
  /// Same as predict, also reporting how many nodes were visited.
  Action predict(const FeatureRow& x, int& visited) const;

  const std::vector<TreeNode>& nodes() const { return nodes_; }
  const TreeParams& params() const { return params_; }
  /// Impurity-decrease importances, normalized to sum to 1 (all zero for a single leaf).
  const std::array<double, kFeatureCount>& importances() const { return importances_; }
  int depth() const;
  std::size_t leaf_count() const;
  /// Set when training met rows with identical features but different labels at the root.
  bool degenerate() const { return degenerate_; }
  void set_degenerate(bool d) { degenerate_ = d; }

  friend bool operator==(const DecisionTree& a, const DecisionTree& b);

 private:
  TreeParams params_;
  std::vector<TreeNode> nodes_;
  std::array<double, kFeatureCount> importances_{};
  bool degenerate_ = false;
};

bool operator==(const TreeNode& a, const TreeNode& b);

/// Greedy Gini CART. Thresholds are midpoints between adjacent distinct
/// values; ties go to the lower feature index, then the lower threshold.
DecisionTree train_tree(const std::vector<FeatureRow>& x, const std::vector<Action>& y, TreeParams params);

double accuracy(const DecisionTree& tree, const std::vector<FeatureRow>& x, const std::vector<Action>& y);

}  // namespace aziza
