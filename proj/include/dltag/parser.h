#pragma once

// Incremental attachment engine.
//
// Units are consumed left to right. Each step extends a state by one legal
// action: seeding the first unit, substituting at the most embedded pending
// site, or adjoining on the governing right frontier. The engine never
// revises an attached unit; ambiguity is carried as parallel states.

#include <cstddef>
#include <vector>

#include "dltag/lexicon.h"
#include "dltag/operations.h"
#include "dltag/tree.h"

namespace dltag {

enum class ParseMode { kDeterministic, kEnumerate };

struct ParserState {
  DiscourseTree tree;
  std::vector<NodeId> pending;  // substitution sites by depth, deepest last
  std::vector<AttachmentAction> history;
  std::size_t consumed = 0;
};

struct Derivation {
  std::vector<AttachmentAction> actions;
  DiscourseTree final;

  // No expectation left unresolved.
  bool complete() const;
};

struct ParseOptions {
  ParseMode mode = ParseMode::kDeterministic;
  std::size_t beam = 64;
  // Re-check every new state against the brute-force oracle.
  bool verify_with_oracle = false;
  // Expansion threads for kEnumerate; 1 runs the serial reference.
  int threads = 1;
};

struct ParseResult {
  // Complete derivations first, each group in generation order.
  std::vector<Derivation> derivations;
  std::size_t beam_dropped = 0;

  std::size_t complete_count() const;
};

// All successors of `state` for `unit` (kEnumerate), or the single one the
// tie-break policy prefers (kDeterministic), in preference order:
// substitution before adjoining, lower adjoining sites before higher ones.
// Throws DeadEndError when no legal attachment exists.
std::vector<ParserState> step(const ParserState& state, const UnitInput& unit,
                              ParseMode mode);

// Like step but returns an empty list at a dead end.
std::vector<ParserState> successors(const ParserState& state,
                                    const UnitInput& unit, ParseMode mode,
                                    bool verify_with_oracle = false);

// One enumeration round over a frontier of states; the results of state i
// precede those of state i + 1. The parallel version matches the serial one
// exactly.
std::vector<ParserState> expand_serial(const std::vector<ParserState>& states,
                                       const UnitInput& unit,
                                       bool verify_with_oracle = false);
std::vector<ParserState> expand_parallel(
    const std::vector<ParserState>& states, const UnitInput& unit,
    int threads, bool verify_with_oracle = false);

// Throws DeadEndError naming the unit at which every state died.
ParseResult parse(const std::vector<UnitInput>& units,
                  const ParseOptions& options);

// Rebuilds the tree from recorded actions. Throws IllegalActionError with
// the index of the first action that does not apply.
DiscourseTree replay(const std::vector<AttachmentAction>& actions);

}  // namespace dltag
