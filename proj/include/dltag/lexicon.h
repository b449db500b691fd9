#pragma once

// The lexicalized half of the grammar: discourse markers and the tree
// templates they anchor.

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dltag/operations.h"
#include "dltag/tree.h"

namespace dltag {

enum class Direction { kForward, kBackward, kBoth };

enum class Schema {
  kElementaryWithSite,        // Rel(unit, ↓)
  kSatisfierLeaf,             // only ever fills a pending site
  kBackwardAuxiliary,         // Rel(*, unit)
  kForwardAuxiliaryWithSite,  // Rel(*, Rel(unit, ↓))
};

enum class MarkerPosition { kClauseInitial, kAnywhere };

struct MarkerEntry {
  std::string name;
  std::vector<std::string> surfaces;  // lower case
  Direction direction = Direction::kForward;
  RelationLabel relation;
  Schema builds = Schema::kElementaryWithSite;
  std::optional<RelationLabel> satisfies;
  MarkerPosition position = MarkerPosition::kClauseInitial;
};

using MarkerRef = std::shared_ptr<const MarkerEntry>;

struct MarkerMatch {
  MarkerRef entry;
  std::size_t offset = 0;  // byte offset in the clause text
  std::string surface;
  // Opens the clause, possibly after other markers. A backward marker that
  // does not is read as scoping over the span its clause completes.
  bool clause_initial = true;
};

class Lexicon {
 public:
  // Parses the line format documented in data/lexicon.txt. Throws
  // Error(kFormat) naming the line on malformed input.
  static Lexicon parse(std::string_view text);
  // Throws Error(kIo) when the file cannot be read.
  static Lexicon load(const std::string& path);
  static const Lexicon& bundled();

  const std::vector<MarkerRef>& entries() const { return entries_; }
  MarkerRef find(std::string_view name) const;

  // Clause-initial markers are read as a chain from the start of the clause
  // ("For example, suppose ..."); `any`-position markers are then found
  // anywhere after it. Longest surface form wins. Textual order.
  std::vector<MarkerMatch> match_markers(std::string_view text) const;

 private:
  std::vector<MarkerRef> entries_;
};

struct UnitInput {
  std::string id;
  std::string text;
  std::size_t seq = 0;
  std::vector<MarkerMatch> markers;

  DiscourseUnit unit() const { return {id, text, seq}; }
};

// Detects markers with `lexicon`.
UnitInput make_unit(std::string id, std::string text, std::size_t seq,
                    const Lexicon& lexicon);

// Explicit markers by entry name; "name:final" marks a non-initial
// occurrence. Throws Error(kFormat) for unknown names.
UnitInput make_unit_with_markers(std::string id, std::string text,
                                 std::size_t seq,
                                 const std::vector<std::string>& markers,
                                 const Lexicon& lexicon);

// A candidate (operation, template) for one unit. Adjoining hypotheses
// carry no site; the parser pairs them with every legal one.
struct AttachmentHypothesis {
  ActionKind op = ActionKind::kSeed;
  TreeTemplate templ;
  RelationLabel relation;
  // Substitution that also relabels the open coerced relation governing
  // the filled site (see open_coerced_ancestor).
  bool respecify = false;
};

// Candidates in preference order: seeding or substitution first, then
// adjoining. The list may be empty.
std::vector<AttachmentHypothesis> build_hypotheses(const UnitInput& unit,
                                                   const DiscourseTree& tree);

// The structure the unit contributes on its own: Rel(unit, ↓) for a forward
// marker, the bare leaf otherwise.
TreeTemplate unit_structure(const UnitInput& unit);

}  // namespace dltag
