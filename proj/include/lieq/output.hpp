#pragma once

#include <json.hpp>

#include <string>

namespace lieq {

enum class OutFormat { Json, Csv };

OutFormat parse_format(const std::string& name);  // "json" | "csv"

/// Machine-readable result of one subcommand. The payload always carries
/// "version", "command", "columns" and "rows"; rationals and dimensions are
/// strings, never floats. CSV rendering emits the columns and rows with
/// RFC-style quoting; JSON rendering pretty-prints the whole payload.
struct OutputDocument {
  OutFormat format = OutFormat::Json;
  nlohmann::json payload;

  std::string render() const;
};

std::string csv_quote(const std::string& field);

}  // namespace lieq
