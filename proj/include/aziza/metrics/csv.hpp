#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "aziza/metrics/metrics.hpp"

namespace aziza {

inline constexpr int kCsvSchemaVersion = 1;

class CsvError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using CsvRow = std::vector<std::string>;

/// RFC 4180 field quoting: fields with commas, quotes or line breaks are quoted, quotes doubled.
std::string csv_field(const std::string& s);
std::string csv_line(const CsvRow& row);
/// Parses RFC 4180 text (CRLF or LF line ends). Throws CsvError on an unterminated quote.
std::vector<CsvRow> parse_csv(const std::string& text);

const CsvRow& runs_csv_header();
std::string runs_csv(const std::vector<RunMetrics>& runs);
std::vector<RunMetrics> parse_runs_csv(const std::string& text);

CsvRow summary_csv_header();
std::string summary_csv(const std::vector<CellSummary>& cells);

void write_runs_csv(const std::filesystem::path& path, const std::vector<RunMetrics>& runs);
std::vector<RunMetrics> read_runs_csv(const std::filesystem::path& path);
void write_summary_csv(const std::filesystem::path& path, const std::vector<CellSummary>& cells);

}  // namespace aziza
