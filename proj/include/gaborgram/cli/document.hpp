#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace gabor::cli {

/// Insertion-ordered JSON: output key order follows construction order.
using Json = nlohmann::ordered_json;

/// Named rectangular block of numbers; every row has columns.size() entries.
struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  friend bool operator==(const Table&, const Table&) = default;
};

/// One command's output: what was run, the numbers, and the run context.
/// metadata always carries "version" and "tolerances"; "generated" only with --stamp.
struct Document {
  Json manifest;
  std::vector<Table> tables;
  Json metadata;

  const Table& table(std::string_view name) const;

  friend bool operator==(const Document&, const Document&) = default;
};

enum class Format { kCsv, kJson };

Json to_json(const Document& doc);
/// Inverse of to_json; throws InvalidArgument on a malformed document.
Document document_from_json(const Json& j);

/// Shortest text that parses back to exactly the same double.
std::string format_double(double v);

/// '#'-prefixed header lines (manifest and metadata as compact JSON), then
/// per table a "# table: name" line, the column line and the rows.
void write_csv(std::ostream& os, const Document& doc);
std::string render(const Document& doc, Format format);

/// Writes to a sibling temporary file and renames it over path.
void write_atomic(const std::string& path, const std::string& contents);

}  // namespace gabor::cli
