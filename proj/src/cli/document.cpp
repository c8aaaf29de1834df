#include "gaborgram/cli/document.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <system_error>

#include "gaborgram/errors.hpp"

namespace gabor::cli {

const Table& Document::table(std::string_view name) const {
  for (const auto& t : tables)
    if (t.name == name) return t;
  throw InvalidArgument("no table named " + std::string(name));
}

Json to_json(const Document& doc) {
  Json data = Json::object();
  for (const auto& t : doc.tables) data[t.name] = {{"columns", t.columns}, {"rows", t.rows}};
  return {{"manifest", doc.manifest}, {"data", data}, {"metadata", doc.metadata}};
}

Document document_from_json(const Json& j) {
  try {
    Document doc;
    doc.manifest = j.at("manifest");
    doc.metadata = j.at("metadata");
    for (const auto& [name, entry] : j.at("data").items()) {
      Table t{name, entry.at("columns").get<std::vector<std::string>>(),
              entry.at("rows").get<std::vector<std::vector<double>>>()};
      for (const auto& row : t.rows)
        if (row.size() != t.columns.size())
          throw InvalidArgument("row width does not match columns in table " + t.name);
      doc.tables.push_back(std::move(t));
    }
    return doc;
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("malformed document: ") + e.what());
  }
}

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void write_csv(std::ostream& os, const Document& doc) {
  os << "# manifest: " << doc.manifest.dump() << '\n';
  os << "# metadata: " << doc.metadata.dump() << '\n';
  for (const auto& t : doc.tables) {
    os << "# table: " << t.name << '\n';
    for (std::size_t c = 0; c < t.columns.size(); ++c) os << (c ? "," : "") << t.columns[c];
    os << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << format_double(row[c]);
      os << '\n';
    }
  }
}

std::string render(const Document& doc, Format format) {
  if (format == Format::kJson) return to_json(doc).dump() + "\n";
  std::ostringstream os;
  write_csv(os, doc);
  return os.str();
}

void write_atomic(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InvalidArgument("cannot open " + tmp.string() + " for writing");
    out << contents;
    out.flush();
    if (!out) throw InvalidArgument("write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw InvalidArgument("cannot move output into place at " + path + ": " + ec.message());
  }
}

}  // namespace gabor::cli
