#include "lieq/output.hpp"

#include <sstream>
#include <stdexcept>

namespace lieq {

OutFormat parse_format(const std::string& name) {
  if (name == "json") return OutFormat::Json;
  if (name == "csv") return OutFormat::Csv;
  throw std::invalid_argument("unknown output format: " + name);
}

std::string csv_quote(const std::string& field) {
  bool needs_quotes = field.find_first_of(",\"\n\r") != std::string::npos;
  if (!needs_quotes) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

namespace {

std::string cell_to_string(const nlohmann::json& cell) {
  if (cell.is_string()) return cell.get<std::string>();
  if (cell.is_null()) return "";
  return cell.dump();
}

}  // namespace

std::string OutputDocument::render() const {
  if (format == OutFormat::Json) return payload.dump(2) + "\n";

  std::ostringstream out;
  const auto& columns = payload.at("columns");
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) out << ",";
    out << csv_quote(cell_to_string(columns[i]));
  }
  out << "\n";
  for (const auto& row : payload.at("rows")) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ",";
      out << csv_quote(cell_to_string(row[i]));
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace lieq
