#include "bohr/output.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace bohr {

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  return std::nullopt;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::string cell_text(const nlohmann::ordered_json& v) {
  switch (v.type()) {
    case nlohmann::json::value_t::null: return "";
    case nlohmann::json::value_t::boolean: return v.get<bool>() ? "true" : "false";
    case nlohmann::json::value_t::number_float: return format_double(v.get<double>());
    case nlohmann::json::value_t::string: return v.get<std::string>();
    default: return v.dump();
  }
}

}  // namespace

std::string OutputRecord::to_csv() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
  os << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      os << (i ? "," : "");
      if (auto it = row.find(columns[i]); it != row.end()) os << cell_text(*it);
    }
    os << "\n";
  }
  return os.str();
}

std::string OutputRecord::to_json() const {
  nlohmann::ordered_json doc;
  doc["schema_version"] = schema_version;
  doc["command"] = command;
  doc["parameters"] = parameters;
  doc["results"] = rows;
  return doc.dump(2) + "\n";
}

std::string OutputRecord::render(OutputFormat format) const {
  return format == OutputFormat::csv ? to_csv() : to_json();
}

void emit(const OutputRecord& record, OutputFormat format,
          const std::optional<std::string>& out_path) {
  const std::string text = record.render(format);
  if (out_path) {
    std::ofstream out(*out_path);
    if (!out) throw std::invalid_argument("cannot open output file: " + *out_path);
    out << text;
  } else {
    std::cout << text;
  }
}

}  // namespace bohr
