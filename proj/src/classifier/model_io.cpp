#include "aziza/classifier/model_io.hpp"

#include "aziza/core/files.hpp"
#include "json.hpp"

namespace aziza {

using nlohmann::json;

std::string serialize_model(const DecisionTree& tree) {
  json j;
  j["format"] = "aziza-decision-tree";
  j["version"] = kModelSchemaVersion;
  j["max_depth"] = tree.params().max_depth;
  j["min_samples_leaf"] = tree.params().min_samples_leaf;
  j["features"] = json::array();
  for (auto name : FeatureVector::kNames) j["features"].push_back(std::string(name));
  j["importances"] = tree.importances();
  json nodes = json::array();
  for (const TreeNode& n : tree.nodes()) {
    json e;
    e["depth"] = n.depth;
    e["counts"] = n.counts;
    e["label"] = to_string(n.label);
    if (!n.leaf()) {
      e["feature"] = n.feature;
      e["threshold"] = n.threshold;
      e["left"] = n.left;
      e["right"] = n.right;
    }
    nodes.push_back(std::move(e));
  }
  j["nodes"] = std::move(nodes);
  return j.dump(1) + "\n";
}

DecisionTree parse_model(const std::string& text) {
  using K = ModelError::Kind;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ModelError(K::CorruptFile, std::string("model file is not valid JSON: ") + e.what());
  }
  try {
    if (!j.is_object() || j.value("format", "") != "aziza-decision-tree") {
      throw ModelError(K::CorruptFile, "not a decision-tree model file");
    }
    const int version = j.at("version").get<int>();
    if (version != kModelSchemaVersion) {
      throw ModelError(K::SchemaVersionMismatch, "model schema version " + std::to_string(version) + ", expected " +
                                                     std::to_string(kModelSchemaVersion));
    }
    TreeParams p{j.at("max_depth").get<int>(), j.at("min_samples_leaf").get<int>()};
    const auto imp = j.at("importances").get<std::array<double, kFeatureCount>>();
    std::vector<TreeNode> nodes;
    for (const json& e : j.at("nodes")) {
      TreeNode n;
      n.depth = e.at("depth").get<int>();
      n.counts = e.at("counts").get<std::array<std::uint32_t, kActionCount>>();
      const auto label = parse_action(e.at("label").get<std::string>());
      if (!label) throw ModelError(K::CorruptFile, "unknown leaf label");
      n.label = *label;
      if (e.contains("feature")) {
        n.feature = e.at("feature").get<int>();
        n.threshold = e.at("threshold").get<double>();
        n.left = e.at("left").get<int>();
        n.right = e.at("right").get<int>();
      }
      nodes.push_back(n);
    }
    // Structural checks: children exist and come after their parent.
    if (nodes.empty()) throw ModelError(K::CorruptFile, "model has no nodes");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const TreeNode& n = nodes[i];
      if (n.leaf()) continue;
      const auto bad = [&](int c) { return c <= static_cast<int>(i) || c >= static_cast<int>(nodes.size()); };
      if (n.feature >= static_cast<int>(kFeatureCount) || bad(n.left) || bad(n.right)) {
        throw ModelError(K::CorruptFile, "model node " + std::to_string(i) + " is malformed");
      }
    }
    return DecisionTree(p, std::move(nodes), imp);
  } catch (const json::exception& e) {
    throw ModelError(K::CorruptFile, std::string("model file is incomplete: ") + e.what());
  }
}

void export_model(const DecisionTree& tree, const std::filesystem::path& path) {
  write_file_atomic(path, serialize_model(tree));
}

DecisionTree load_model(const std::filesystem::path& path) {
  auto text = read_file(path);
  if (!text) throw ModelError(ModelError::Kind::CorruptFile, "cannot read " + path.string());
  return parse_model(*text);
}

}  // namespace aziza
