#pragma once

#include <memory>
#include <string_view>

#include "aziza/classifier/tree.hpp"
#include "aziza/routing/decision.hpp"

namespace aziza {

/// The forwarding classifier used by AZIZA: the closed-form threshold rule, a
/// trained tree, or (for the no-classifier variant) a rule that always
/// forwards once the predictability gate has passed.
class DecisionModel {
 public:
  enum class Kind { ClosedForm, TrainedTree, PredictabilityGate };

  DecisionModel() = default;
  static DecisionModel closed_form(DecisionThresholds t = {});
  static DecisionModel trained(DecisionTree tree);
  static DecisionModel predictability_gate();

  Action decide(const FeatureVector& f, double message_bytes) const;
  Kind kind() const { return kind_; }
  std::string_view kind_name() const;
  const DecisionThresholds& thresholds() const { return thresholds_; }
  const DecisionTree* tree() const { return tree_.get(); }

 private:
  Kind kind_ = Kind::ClosedForm;
  DecisionThresholds thresholds_;
  std::shared_ptr<const DecisionTree> tree_;
};

}  // namespace aziza
