#include "aziza/metrics/csv.hpp"

#include <charconv>
#include <unordered_map>

#include "aziza/core/files.hpp"

namespace aziza {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_line(const CsvRow& row) {
  std::string out;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out += ',';
    out += csv_field(row[i]);
  }
  out += "\r\n";
  return out;
}

std::vector<CsvRow> parse_csv(const std::string& text) {
  std::vector<CsvRow> rows;
  CsvRow row;
  std::string field;
  bool quoted = false;
  bool any = false;
  std::size_t line = 1;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        quoted = true;
        any = true;
        break;
      case ',':
        row.push_back(std::move(field));
        field.clear();
        any = true;
        break;
      case '\r':
        break;
      case '\n':
        row.push_back(std::move(field));
        field.clear();
        rows.push_back(std::move(row));
        row.clear();
        any = false;
        ++line;
        break;
      default:
        field += c;
        any = true;
    }
  }
  if (quoted) throw CsvError("unterminated quoted field starting before line " + std::to_string(line));
  if (any) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

std::string u64(std::uint64_t v) { return std::to_string(v); }

template <class T>
T parse_number(const std::string& s, const std::string& column) {
  T v{};
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
    throw CsvError("column " + column + ": bad number '" + s + "'");
  }
  return v;
}

}  // namespace

const CsvRow& runs_csv_header() {
  static const CsvRow header{"schema_version", "protocol", "seed", "node_count", "blackhole_frac", "ablation",
                             "config_hash", "created", "delivered", "relayed", "dr", "add_seconds",
                             "add_median_seconds", "or_ratio", "hc", "total_energy_j", "ee", "sr", "empty_run",
                             "contacts", "aborted", "max_live_copies"};
  return header;
}

std::string runs_csv(const std::vector<RunMetrics>& runs) {
  std::string out = csv_line(runs_csv_header());
  for (const RunMetrics& m : runs) {
    out += csv_line({std::to_string(kCsvSchemaVersion), m.cell.protocol, u64(m.seed),
                     std::to_string(m.cell.node_count), format_double(m.cell.blackhole_frac), m.cell.ablation,
                     m.config_hash, u64(m.created), u64(m.delivered), u64(m.relayed), format_double(m.dr),
                     format_double(m.add_seconds), format_double(m.add_median_seconds), format_double(m.or_ratio),
                     format_double(m.hc), format_double(m.total_energy_j), format_double(m.ee),
                     format_double(m.sr), m.empty_run ? "1" : "0", u64(m.contacts), u64(m.aborted),
                     std::to_string(m.max_live_copies)});
  }
  return out;
}

std::vector<RunMetrics> parse_runs_csv(const std::string& text) {
  const auto rows = parse_csv(text);
  if (rows.empty()) throw CsvError("runs table has no header");
  std::unordered_map<std::string, std::size_t> col;
  for (std::size_t i = 0; i < rows[0].size(); ++i) col[rows[0][i]] = i;
  for (const std::string& name : runs_csv_header()) {
    if (!col.count(name)) throw CsvError("runs table lacks column " + name);
  }
  std::vector<RunMetrics> out;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const CsvRow& row = rows[r];
    if (row.size() != rows[0].size()) {
      throw CsvError("runs row " + std::to_string(r) + " has " + std::to_string(row.size()) + " fields");
    }
    auto get = [&](const char* name) -> const std::string& { return row[col.at(name)]; };
    auto num = [&](const char* name) { return parse_number<double>(get(name), name); };
    auto count = [&](const char* name) { return parse_number<std::uint64_t>(get(name), name); };
    if (parse_number<int>(get("schema_version"), "schema_version") != kCsvSchemaVersion) {
      throw CsvError("runs row " + std::to_string(r) + " has an unsupported schema version");
    }
    RunMetrics m;
    m.cell.protocol = get("protocol");
    m.seed = count("seed");
    m.cell.node_count = parse_number<int>(get("node_count"), "node_count");
    m.cell.blackhole_frac = num("blackhole_frac");
    m.cell.ablation = get("ablation");
    m.config_hash = get("config_hash");
    m.created = count("created");
    m.delivered = count("delivered");
    m.relayed = count("relayed");
    m.dr = num("dr");
    m.add_seconds = num("add_seconds");
    m.add_median_seconds = num("add_median_seconds");
    m.or_ratio = num("or_ratio");
    m.hc = num("hc");
    m.total_energy_j = num("total_energy_j");
    m.ee = num("ee");
    m.sr = num("sr");
    m.empty_run = get("empty_run") == "1";
    m.contacts = count("contacts");
    m.aborted = count("aborted");
    m.max_live_copies = parse_number<int>(get("max_live_copies"), "max_live_copies");
    out.push_back(std::move(m));
  }
  return out;
}

CsvRow summary_csv_header() {
  CsvRow h{"schema_version", "protocol", "node_count", "blackhole_frac", "ablation", "runs"};
  for (const std::string& name : summary_metric_names()) {
    h.push_back(name + "_mean");
    h.push_back(name + "_std");
  }
  return h;
}

std::string summary_csv(const std::vector<CellSummary>& cells) {
  std::string out = csv_line(summary_csv_header());
  for (const CellSummary& s : cells) {
    CsvRow row{std::to_string(kCsvSchemaVersion), s.cell.protocol, std::to_string(s.cell.node_count),
               format_double(s.cell.blackhole_frac), s.cell.ablation, std::to_string(s.runs)};
    for (const std::string& name : summary_metric_names()) {
      const MeanStd& v = s.values.at(name);
      row.push_back(format_double(v.mean));
      row.push_back(format_double(v.std));
    }
    out += csv_line(row);
  }
  return out;
}

void write_runs_csv(const std::filesystem::path& path, const std::vector<RunMetrics>& runs) {
  write_file_atomic(path, runs_csv(runs));
}

std::vector<RunMetrics> read_runs_csv(const std::filesystem::path& path) {
  auto text = read_file(path);
  if (!text) throw CsvError("cannot read " + path.string());
  return parse_runs_csv(*text);
}

void write_summary_csv(const std::filesystem::path& path, const std::vector<CellSummary>& cells) {
  write_file_atomic(path, summary_csv(cells));
}

}  // namespace aziza
