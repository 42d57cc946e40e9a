#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace aziza {

/// Writes `content` to a sibling temp file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

std::optional<std::string> read_file(const std::filesystem::path& path);

/// Shortest decimal text that parses back to the same double.
std::string format_double(double v);

}  // namespace aziza
