#include "dltag/stats.h"

#include <cctype>
#include <sstream>

namespace dltag {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)); }

std::string strip(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

bool has_word(std::string_view s) {
  for (char c : s) {
    if (std::isalnum(static_cast<unsigned char>(c))) return true;
  }
  return false;
}

std::string drop_comments(std::string_view document) {
  std::string out;
  std::istringstream in{std::string(document)};
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t");
    if (first != std::string::npos && line[first] == '#') continue;
    out += line;
    out += ' ';
  }
  return out;
}

std::vector<std::string> sentences(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i++];
    if (c != '.' && c != '!' && c != '?' && c != ';') continue;
    while (i < text.size() && (text[i] == '"' || text[i] == '\'' ||
                               text[i] == ')' || text[i] == '.' ||
                               text[i] == '!' || text[i] == '?')) {
      ++i;
    }
    if (i < text.size() && !is_space(text[i])) continue;
    out.push_back(text.substr(start, i - start));
    start = i;
  }
  out.push_back(text.substr(start));
  return out;
}

}  // namespace

std::vector<std::string> segment_clauses(std::string_view document,
                                         const Lexicon& lexicon) {
  std::vector<std::string> out;
  auto emit = [&](std::string_view piece) {
    std::string s = strip(piece);
    if (has_word(s)) out.push_back(std::move(s));
  };
  for (const auto& sentence : sentences(drop_comments(document))) {
    std::size_t start = 0;
    for (std::size_t i = 0; i < sentence.size(); ++i) {
      if (sentence[i] != ',') continue;
      const auto rest = std::string_view(sentence).substr(i + 1);
      const auto matches = lexicon.match_markers(rest);
      if (!matches.empty() && matches.front().clause_initial) {
        emit(std::string_view(sentence).substr(start, i + 1 - start));
        start = i + 1;
      }
    }
    emit(std::string_view(sentence).substr(start));
  }
  return out;
}

StatsReport compute_stats(std::string_view document, const Lexicon& lexicon) {
  StatsReport report;
  struct Satisfier {
    std::string marker;
    std::size_t seq;
    RelationLabel satisfies;
    bool used = false;
  };
  std::vector<Satisfier> satisfiers;

  const auto clauses = segment_clauses(document, lexicon);
  report.clauses = clauses.size();
  for (std::size_t seq = 0; seq < clauses.size(); ++seq) {
    for (const auto& m : lexicon.match_markers(clauses[seq])) {
      const MarkerEntry& e = *m.entry;
      ++report.marker_counts[e.name];
      if (e.direction != Direction::kBackward) {
        report.raises.push_back({e.name, seq, e.relation});
      }
      if (e.direction != Direction::kForward && e.satisfies) {
        satisfiers.push_back({e.name, seq, *e.satisfies});
      }
    }
  }

  for (const auto& raise : report.raises) {
    for (auto& s : satisfiers) {
      if (s.used || s.seq <= raise.seq || s.satisfies != raise.relation) {
        continue;
      }
      s.used = true;
      const std::size_t distance = s.seq - raise.seq - 1;
      report.resolutions.push_back({s.marker, s.seq, raise.seq, distance});
      ++report.distance_histogram[distance];
      break;
    }
  }
  report.unresolved = report.raises.size() - report.resolutions.size();
  return report;
}

std::string render_table(const StatsReport& r) {
  std::ostringstream out;
  auto row = [&](const std::string& name, std::size_t value) {
    out << "  " << name;
    for (std::size_t i = name.size(); i < 28; ++i) out << ' ';
    out << value << '\n';
  };
  out << "clauses: " << r.clauses << '\n';
  out << "marker counts:\n";
  if (r.marker_counts.empty()) out << "  (none)\n";
  for (const auto& [name, count] : r.marker_counts) row(name, count);
  out << "expectations:\n";
  row("raised", r.raises.size());
  row("resolved", r.resolutions.size());
  row("unresolved", r.unresolved);
  out << "resolution distance (units between raise and resolution):\n";
  if (r.distance_histogram.empty()) out << "  (none)\n";
  for (const auto& [distance, count] : r.distance_histogram) {
    row(std::to_string(distance), count);
  }
  out << "note: raises are paired with the nearest following satisfying "
         "marker; this approximates a manual reading.\n";
  return out.str();
}

nlohmann::json stats_to_json(const StatsReport& r) {
  nlohmann::json j;
  j["clauses"] = r.clauses;
  j["marker_counts"] = r.marker_counts;
  auto raises = nlohmann::json::array();
  for (const auto& e : r.raises) {
    raises.push_back(
        {{"marker", e.marker}, {"seq", e.seq}, {"relation", e.relation.name()}});
  }
  j["raises"] = std::move(raises);
  auto resolutions = nlohmann::json::array();
  for (const auto& e : r.resolutions) {
    resolutions.push_back({{"marker", e.marker},
                           {"seq", e.seq},
                           {"raise_seq", e.raise_seq},
                           {"distance", e.distance}});
  }
  j["resolutions"] = std::move(resolutions);
  auto histogram = nlohmann::json::object();
  for (const auto& [distance, count] : r.distance_histogram) {
    histogram[std::to_string(distance)] = count;
  }
  j["distance_histogram"] = std::move(histogram);
  j["unresolved"] = r.unresolved;
  j["pairing"] = "nearest-following-satisfier (approximation)";
  return j;
}

}  // namespace dltag
