#include "dltag/document.h"

#include <fstream>
#include <sstream>

#include "dltag/error.h"
#include "json.hpp"

namespace dltag {

namespace {

UnitInput record_to_unit(const nlohmann::json& record, std::size_t seq,
                         const Lexicon& lexicon) {
  auto fail = [&](const std::string& what) {
    return Error(ErrorCode::kFormat,
                 "record " + std::to_string(seq + 1) + ": " + what);
  };
  if (!record.is_object()) throw fail("expected an object");
  if (!record.contains("id") || !record["id"].is_string()) {
    throw fail("missing string field 'id'");
  }
  if (!record.contains("text") || !record["text"].is_string()) {
    throw fail("missing string field 'text'");
  }
  std::string id = record["id"];
  std::string text = record["text"];
  if (!record.contains("markers")) {
    return make_unit(std::move(id), std::move(text), seq, lexicon);
  }
  const auto& markers = record["markers"];
  if (!markers.is_array()) throw fail("'markers' must be an array");
  std::vector<std::string> names;
  for (const auto& m : markers) {
    if (!m.is_string()) throw fail("'markers' entries must be strings");
    names.push_back(m);
  }
  try {
    return make_unit_with_markers(std::move(id), std::move(text), seq, names,
                                  lexicon);
  } catch (const Error& e) {
    throw fail(e.what());
  }
}

}  // namespace

std::vector<UnitInput> parse_document(std::string_view text,
                                      const Lexicon& lexicon) {
  std::vector<nlohmann::json> records;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  try {
    if (text[first] == '[') {
      for (auto& r : nlohmann::json::parse(text)) records.push_back(r);
    } else {
      std::istringstream in{std::string(text)};
      std::string line;
      while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        records.push_back(nlohmann::json::parse(line));
      }
    }
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kFormat, std::string("document: ") + e.what());
  }
  std::vector<UnitInput> units;
  for (std::size_t i = 0; i < records.size(); ++i) {
    units.push_back(record_to_unit(records[i], i, lexicon));
  }
  return units;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<UnitInput> load_document(const std::string& path,
                                     const Lexicon& lexicon) {
  return parse_document(read_file(path), lexicon);
}

}  // namespace dltag
