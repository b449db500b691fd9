#pragma once

// Marker statistics over plain text.
//
// The text is cut into clauses at sentence punctuation and at commas that
// are directly followed by a marker. A forward marker raises an expectation;
// it is paired with the nearest following clause whose backward marker
// satisfies the same relation. That pairing approximates a manual reading of
// the text and is labelled as such in the rendered report.

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "dltag/lexicon.h"
#include "json.hpp"

namespace dltag {

// Lines starting with '#' are comments.
std::vector<std::string> segment_clauses(std::string_view document,
                                         const Lexicon& lexicon);

struct ExpectationEvent {
  std::string marker;
  std::size_t seq = 0;
  RelationLabel relation;
};

struct ResolutionEvent {
  std::string marker;
  std::size_t seq = 0;
  std::size_t raise_seq = 0;
  std::size_t distance = 0;  // units strictly between raise and resolution
};

struct StatsReport {
  std::size_t clauses = 0;
  std::map<std::string, std::size_t> marker_counts;  // by entry name
  std::vector<ExpectationEvent> raises;
  std::vector<ResolutionEvent> resolutions;
  std::map<std::size_t, std::size_t> distance_histogram;
  std::size_t unresolved = 0;
};

StatsReport compute_stats(std::string_view document, const Lexicon& lexicon);

std::string render_table(const StatsReport& report);
nlohmann::json stats_to_json(const StatsReport& report);

}  // namespace dltag
