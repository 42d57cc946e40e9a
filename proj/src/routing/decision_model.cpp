#include "aziza/routing/decision_model.hpp"

namespace aziza {

DecisionModel DecisionModel::closed_form(DecisionThresholds t) {
  DecisionModel m;
  m.kind_ = Kind::ClosedForm;
  m.thresholds_ = t;
  return m;
}

DecisionModel DecisionModel::trained(DecisionTree tree) {
  DecisionModel m;
  m.kind_ = Kind::TrainedTree;
  m.tree_ = std::make_shared<const DecisionTree>(std::move(tree));
  return m;
}

DecisionModel DecisionModel::predictability_gate() {
  DecisionModel m;
  m.kind_ = Kind::PredictabilityGate;
  return m;
}

Action DecisionModel::decide(const FeatureVector& f, double message_bytes) const {
  switch (kind_) {
    case Kind::ClosedForm: return decide_closed_form(f, thresholds_, message_bytes);
    case Kind::TrainedTree: return tree_->predict(f.as_array());
    case Kind::PredictabilityGate: return Action::Forward;
  }
  return Action::Hold;
}

std::string_view DecisionModel::kind_name() const {
  switch (kind_) {
    case Kind::ClosedForm: return "closed_form";
    case Kind::TrainedTree: return "trained_tree";
    case Kind::PredictabilityGate: return "predictability_gate";
  }
  return "closed_form";
}

}  // namespace aziza
