#pragma once

#include <cctype>
#include <charconv>
#include <cstddef>
#include <fstream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "logent/common.hpp"

// File ingestion for the CLI: one numeric column out of a CSV file
// (RFC-4180 subset: comma-separated, optional double-quoting with ""
// escapes, optional header row, no newlines inside quoted fields) or a
// JSONL file (one JSON number or one flat object per line).
//
// Strict by default: every data row must yield a number, and failures
// carry the 1-based line number.  Lenient mode skips unparsable rows and
// counts them instead.

namespace logent {

struct IngestOptions {
  std::optional<std::string> column;  // name, or 0-based index if all digits
  bool lenient = false;
};

struct IngestResult {
  std::vector<double> values;
  std::size_t n_skipped = 0;  // lenient mode only; strict mode throws instead
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline bool parse_number(std::string_view s, double& out) {
  s = trim(s);
  if (s.empty()) return false;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

// Splits one CSV record into fields, handling quoted fields with "" escapes.
inline std::vector<std::string> split_csv_record(const std::string& line, std::size_t line_no) {
  std::vector<std::string> fields;
  std::string field;
  bool in_quotes = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      in_quotes = true;
    } else if (c == ',') {
      fields.push_back(field);
      field.clear();
    } else {
      field += c;
    }
  }
  if (in_quotes)
    throw data_error("line " + std::to_string(line_no) + ": unterminated quoted field");
  fields.push_back(field);
  return fields;
}

inline bool looks_like_index(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

inline std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw data_error("cannot open file: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

inline IngestResult ingest_csv(const std::vector<std::string>& lines, const IngestOptions& opt) {
  // Locate the column and decide whether the first row is a header: if the
  // column is named, a header is required; otherwise the first row is a
  // header exactly when its selected cell is not a number.
  std::size_t col = 0;
  std::size_t first_data_line = 0;  // 0-based index into lines
  std::optional<std::string> want_name;
  if (opt.column) {
    if (detail::looks_like_index(*opt.column))
      col = static_cast<std::size_t>(std::stoul(*opt.column));
    else
      want_name = *opt.column;
  }

  std::size_t probe = 0;
  while (probe < lines.size() && detail::trim(lines[probe]).empty()) ++probe;
  if (probe == lines.size()) throw data_error("no data");

  const auto first_fields = split_csv_record(lines[probe], probe + 1);
  if (want_name) {
    bool found = false;
    for (std::size_t i = 0; i < first_fields.size(); ++i) {
      if (std::string(detail::trim(first_fields[i])) == *want_name) {
        col = i;
        found = true;
        break;
      }
    }
    if (!found)
      throw data_error("column \"" + *want_name + "\" not found in CSV header (line " +
                       std::to_string(probe + 1) + ")");
    first_data_line = probe + 1;
  } else {
    double ignored;
    const bool header = col >= first_fields.size() ||
                        !parse_number(first_fields[col], ignored);
    first_data_line = header ? probe + 1 : probe;
  }

  IngestResult result;
  for (std::size_t i = first_data_line; i < lines.size(); ++i) {
    if (detail::trim(lines[i]).empty()) continue;
    const std::size_t line_no = i + 1;
    const auto fields = split_csv_record(lines[i], line_no);
    double value;
    const bool ok = col < fields.size() && parse_number(fields[col], value);
    if (ok) {
      result.values.push_back(value);
    } else if (opt.lenient) {
      ++result.n_skipped;
    } else {
      throw data_error("line " + std::to_string(line_no) + ": cannot parse column " +
                       std::to_string(col) + " as a number");
    }
  }
  if (result.values.empty()) throw data_error("no data");
  return result;
}

inline IngestResult ingest_jsonl(const std::vector<std::string>& lines, const IngestOptions& opt) {
  IngestResult result;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (detail::trim(lines[i]).empty()) continue;
    const std::size_t line_no = i + 1;
    nlohmann::json j = nlohmann::json::parse(lines[i], nullptr, /*allow_exceptions=*/false);
    double value = 0.0;
    bool ok = false;
    if (j.is_number()) {
      value = j.get<double>();
      ok = true;
    } else if (j.is_object()) {
      if (!opt.column)
        throw data_error("line " + std::to_string(line_no) +
                         ": JSONL object rows require --column to name the field");
      if (auto it = j.find(*opt.column); it != j.end() && it->is_number()) {
        value = it->get<double>();
        ok = true;
      }
    }
    if (ok) {
      result.values.push_back(value);
    } else if (opt.lenient) {
      ++result.n_skipped;
    } else {
      throw data_error("line " + std::to_string(line_no) + ": cannot extract a number" +
                       (opt.column ? " from field \"" + *opt.column + "\"" : ""));
    }
  }
  if (result.values.empty()) throw data_error("no data");
  return result;
}

}  // namespace detail

// Format is chosen by extension (.jsonl / .ndjson) or, failing that, by the
// first non-empty line starting with '{'.  Bare numbers one per line parse
// identically either way.
inline IngestResult ingest_file(const std::string& path, const IngestOptions& opt = {}) {
  const auto lines = detail::read_lines(path);

  bool jsonl = false;
  if (path.size() >= 6 && path.substr(path.size() - 6) == ".jsonl")
    jsonl = true;
  else if (path.size() >= 7 && path.substr(path.size() - 7) == ".ndjson")
    jsonl = true;
  else
    for (const auto& line : lines) {
      const auto t = detail::trim(line);
      if (t.empty()) continue;
      jsonl = t.front() == '{';
      break;
    }

  return jsonl ? detail::ingest_jsonl(lines, opt) : detail::ingest_csv(lines, opt);
}

}  // namespace logent
