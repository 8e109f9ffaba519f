#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace bohr {

enum class OutputFormat { csv, json };
std::optional<OutputFormat> parse_format(std::string_view name);

/// Formats with 17 significant digits, enough to reparse bit-exactly.
std::string format_double(double v);

/// One command's machine-readable result: a parameter block plus a list of
/// rows sharing a fixed column order.
struct OutputRecord {
  std::string command;
  int schema_version = 1;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  std::vector<std::string> columns;
  std::vector<nlohmann::ordered_json> rows;

  void add_row(nlohmann::ordered_json row) { rows.push_back(std::move(row)); }

  std::string to_csv() const;
  std::string to_json() const;
  std::string render(OutputFormat format) const;
};

/// Writes to the path when given, else to stdout.
void emit(const OutputRecord& record, OutputFormat format,
          const std::optional<std::string>& out_path);

}  // namespace bohr
