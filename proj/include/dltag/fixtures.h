#pragma once

// Bundled worked examples, used by `dltag demo` and the test suites.

#include <string>
#include <vector>

#include "dltag/lexicon.h"
#include "dltag/parser.h"

namespace dltag {

struct FixtureUnit {
  std::string id;
  std::string text;
};

struct Example {
  int number = 0;
  std::string title;
  std::vector<FixtureUnit> units;
  ParseMode mode = ParseMode::kDeterministic;
  // Final tree in bracket notation; for kEnumerate, the tree expected among
  // the complete derivations.
  std::string golden;
};

const std::vector<Example>& bundled_examples();

// Throws Error(kFormat) for an unknown number.
const Example& bundled_example(int number);

std::vector<UnitInput> example_units(const Example& example,
                                     const Lexicon& lexicon);

}  // namespace dltag
