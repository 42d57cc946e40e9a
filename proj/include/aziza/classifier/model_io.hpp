#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "aziza/classifier/tree.hpp"

namespace aziza {

inline constexpr int kModelSchemaVersion = 1;

class ModelError : public std::runtime_error {
 public:
  enum class Kind { SchemaVersionMismatch, CorruptFile };
  ModelError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Versioned JSON encoding of splits and leaves; doubles round-trip exactly.
std::string serialize_model(const DecisionTree& tree);
DecisionTree parse_model(const std::string& text);

void export_model(const DecisionTree& tree, const std::filesystem::path& path);
DecisionTree load_model(const std::filesystem::path& path);

}  // namespace aziza
