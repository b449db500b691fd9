#pragma once

// Input documents: an ordered list of records {id, text, markers?}, either
// as one JSON array or as JSON lines. `markers` overrides detection; each
// entry is a lexicon name, optionally suffixed ":final" for a marker that
// closes its clause.

#include <string>
#include <string_view>
#include <vector>

#include "dltag/lexicon.h"

namespace dltag {

// Errors: kFormat (with the record number) for malformed input.
std::vector<UnitInput> parse_document(std::string_view text,
                                      const Lexicon& lexicon);

// Errors: kIo, kFormat.
std::vector<UnitInput> load_document(const std::string& path,
                                     const Lexicon& lexicon);

std::string read_file(const std::string& path);

}  // namespace dltag
