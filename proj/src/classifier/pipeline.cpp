#include "aziza/classifier/pipeline.hpp"

#include <algorithm>

#include "json.hpp"

namespace aziza {

std::vector<RankedFeature> rank_features(const DecisionTree& tree) {
  std::vector<RankedFeature> out;
  for (std::size_t i = 0; i < kFeatureCount; ++i) {
    out.push_back({std::string(FeatureVector::kNames[i]), tree.importances()[i]});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const RankedFeature& a, const RankedFeature& b) { return a.importance > b.importance; });
  return out;
}

PipelineResult run_pipeline(const PipelineOptions& o) {
  const Dataset data = generate_dataset(o.priors, o.n, o.seed);
  PipelineResult r;
  for (Action a : data.labels) ++r.label_counts[static_cast<std::size_t>(a)];
  r.cv = cross_validate(data, o.grid, o.folds, o.seed);
  r.model = train_tree(data.rows, data.labels, r.cv.best().params);
  r.training_accuracy = accuracy(r.model, data.rows, data.labels);
  r.ranking = rank_features(r.model);
  return r;
}

std::string pipeline_report_json(const PipelineOptions& o, const PipelineResult& r) {
  nlohmann::ordered_json j;
  j["n"] = o.n;
  j["seed"] = o.seed;
  j["folds"] = o.folds;
  j["labels"] = {{"forward", r.label_counts[0]}, {"hold", r.label_counts[1]}, {"drop", r.label_counts[2]}};
  nlohmann::ordered_json grid = nlohmann::ordered_json::array();
  for (const GridResult& g : r.cv.grid) {
    grid.push_back({{"max_depth", g.params.max_depth},
                    {"min_samples_leaf", g.params.min_samples_leaf},
                    {"fold_accuracy", g.fold_accuracy},
                    {"mean_accuracy", g.mean_accuracy}});
  }
  j["grid"] = grid;
  const GridResult& best = r.cv.best();
  j["selected"] = {{"max_depth", best.params.max_depth},
                   {"min_samples_leaf", best.params.min_samples_leaf},
                   {"mean_accuracy", best.mean_accuracy}};
  j["model"] = {{"depth", r.model.depth()},
                {"leaves", r.model.leaf_count()},
                {"training_accuracy", r.training_accuracy}};
  nlohmann::ordered_json imp = nlohmann::ordered_json::array();
  for (const RankedFeature& f : r.ranking) imp.push_back({{"feature", f.name}, {"importance", f.importance}});
  j["importances"] = imp;
  return j.dump(2) + "\n";
}

}  // namespace aziza
