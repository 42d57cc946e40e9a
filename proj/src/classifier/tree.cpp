#include "aziza/classifier/tree.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace aziza {

namespace {

using Counts = std::array<std::uint32_t, kActionCount>;

double gini(const Counts& c) {
  const double n = static_cast<double>(c[0]) + c[1] + c[2];
  if (n == 0.0) return 0.0;
  double s = 0.0;
  for (std::uint32_t v : c) s += (v / n) * (v / n);
  return 1.0 - s;
}

Action majority(const Counts& c) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < kActionCount; ++k) {
    if (c[k] > c[best]) best = k;
  }
  return static_cast<Action>(best);
}

struct Builder {
  const std::vector<FeatureRow>& x;
  const std::vector<Action>& y;
  TreeParams params;
  std::vector<TreeNode> nodes;
  std::array<double, kFeatureCount> gain{};
  double total = 0.0;
  bool degenerate = false;

  Counts count(const std::vector<std::size_t>& idx) const {
    Counts c{};
    for (std::size_t i : idx) ++c[static_cast<std::size_t>(y[i])];
    return c;
  }

  int build(std::vector<std::size_t> idx, int depth) {
    const Counts c = count(idx);
    const int me = static_cast<int>(nodes.size());
    TreeNode node;
    node.counts = c;
    node.label = majority(c);
    node.depth = depth;
    nodes.push_back(node);

    const double parent = gini(c);
    const std::size_t n = idx.size();
    const auto min_leaf = static_cast<std::size_t>(std::max(1, params.min_samples_leaf));
    if (depth >= params.max_depth || parent == 0.0 || n < 2 * min_leaf) return me;

    int best_f = -1;
    double best_t = 0.0;
    double best_gain = 0.0;
    bool any_distinct = false;
    std::vector<std::size_t> order(idx);
    for (std::size_t f = 0; f < kFeatureCount; ++f) {
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return x[a][f] != x[b][f] ? x[a][f] < x[b][f] : a < b;
      });
      Counts left{};
      Counts right = c;
      for (std::size_t k = 0; k + 1 < n; ++k) {
        const auto lab = static_cast<std::size_t>(y[order[k]]);
        ++left[lab];
        --right[lab];
        const double v = x[order[k]][f];
        const double w = x[order[k + 1]][f];
        if (v == w) continue;
        any_distinct = true;
        const std::size_t nl = k + 1;
        const std::size_t nr = n - nl;
        if (nl < min_leaf || nr < min_leaf) continue;
        const double g = parent - (static_cast<double>(nl) / n) * gini(left) - (static_cast<double>(nr) / n) * gini(right);
        if (g > best_gain) {
          best_gain = g;
          best_f = static_cast<int>(f);
          best_t = v + (w - v) / 2.0;
        }
      }
    }
    if (!any_distinct && depth == 0) degenerate = true;
    if (best_f < 0) return me;

    std::vector<std::size_t> li;
    std::vector<std::size_t> ri;
    for (std::size_t i : idx) (x[i][static_cast<std::size_t>(best_f)] <= best_t ? li : ri).push_back(i);
    gain[static_cast<std::size_t>(best_f)] += (static_cast<double>(n) / total) * best_gain;
    idx.clear();
    idx.shrink_to_fit();
    const int l = build(std::move(li), depth + 1);
    const int r = build(std::move(ri), depth + 1);
    nodes[me].feature = best_f;
    nodes[me].threshold = best_t;
    nodes[me].left = l;
    nodes[me].right = r;
    return me;
  }
};

}  // namespace

DecisionTree::DecisionTree(TreeParams params, std::vector<TreeNode> nodes, std::array<double, kFeatureCount> importances)
    : params_(params), nodes_(std::move(nodes)), importances_(importances) {}

Action DecisionTree::predict(const FeatureRow& x) const {
  int visited = 0;
  return predict(x, visited);
}

Action DecisionTree::predict(const FeatureRow& x, int& visited) const {
  visited = 0;
  if (nodes_.empty()) return Action::Hold;
  int i = 0;
  while (true) {
    const TreeNode& n = nodes_[static_cast<std::size_t>(i)];
    ++visited;
    if (n.leaf()) return n.label;
    i = x[static_cast<std::size_t>(n.feature)] <= n.threshold ? n.left : n.right;
  }
}

int DecisionTree::depth() const {
  int d = 0;
  for (const TreeNode& n : nodes_) d = std::max(d, n.depth);
  return d;
}

std::size_t DecisionTree::leaf_count() const {
  return static_cast<std::size_t>(std::count_if(nodes_.begin(), nodes_.end(), [](const TreeNode& n) { return n.leaf(); }));
}

bool operator==(const TreeNode& a, const TreeNode& b) {
  return a.feature == b.feature && a.threshold == b.threshold && a.left == b.left && a.right == b.right &&
         a.label == b.label && a.counts == b.counts && a.depth == b.depth;
}

bool operator==(const DecisionTree& a, const DecisionTree& b) {
  return a.params_.max_depth == b.params_.max_depth && a.params_.min_samples_leaf == b.params_.min_samples_leaf &&
         a.nodes_ == b.nodes_ && a.importances_ == b.importances_;
}

DecisionTree train_tree(const std::vector<FeatureRow>& x, const std::vector<Action>& y, TreeParams params) {
  if (x.empty() || x.size() != y.size()) throw std::invalid_argument("training data is empty or mislabeled");
  Builder b{x, y, params, {}, {}, static_cast<double>(x.size()), false};
  std::vector<std::size_t> idx(x.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  b.build(std::move(idx), 0);
  std::array<double, kFeatureCount> imp = b.gain;
  const double sum = std::accumulate(imp.begin(), imp.end(), 0.0);
  if (sum > 0.0) {
    for (double& v : imp) v /= sum;
  }
  DecisionTree tree(params, std::move(b.nodes), imp);
  tree.set_degenerate(b.degenerate);
  return tree;
}

double accuracy(const DecisionTree& tree, const std::vector<FeatureRow>& x, const std::vector<Action>& y) {
  if (x.empty()) return 0.0;
  std::size_t hit = 0;
  for (std::size_t i = 0; i < x.size(); ++i) hit += tree.predict(x[i]) == y[i];
  return static_cast<double>(hit) / static_cast<double>(x.size());
}

}  // namespace aziza
