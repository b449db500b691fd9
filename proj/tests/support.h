#pragma once

// Shared helpers for the unit tests and the acceptance binary.

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "dltag/lexicon.h"
#include "dltag/parser.h"
#include "dltag/tree.h"

namespace dltag::testing {

std::string source_path(const std::string& relative);

// Deepest substitution site found by a plain recursive walk; nullptr when
// the tree has none. Independent of the frontier module.
const Node* deepest_site_by_walk(const DiscourseTree& tree);

// Depths of all substitution sites, in frontier order.
std::vector<std::size_t> site_depths(const DiscourseTree& tree);

struct RandomStep {
  UnitInput unit;
  DiscourseTree before;
  AttachmentAction action;
  DiscourseTree after;
};

struct RandomDerivation {
  std::vector<RandomStep> steps;
};

// Builds a derivation of `units` units, drawing each unit's markers at
// random and then one successor uniformly among all legal ones. A unit
// whose marker draw has no legal attachment is redrawn, falling back to an
// unmarked unit, which always attaches.
RandomDerivation random_derivation(std::mt19937_64& rng, std::size_t units);

}  // namespace dltag::testing
