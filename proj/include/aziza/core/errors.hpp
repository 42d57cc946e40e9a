#pragma once

#include <stdexcept>
#include <string>

namespace aziza {

/// Rejected scenario or experiment configuration. `where` names the field path
/// (and line/column for parse errors).
class InvalidConfig : public std::runtime_error {
 public:
  InvalidConfig(std::string where, const std::string& what)
      : std::runtime_error(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

}  // namespace aziza
