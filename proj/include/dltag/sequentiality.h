#pragma once

// Brute-force ground truth for the ordering principle: a left-to-right read
// of a tree's non-empty terminals must follow the text order of the units.
//
// Nothing here consults the frontier module or the grammar operations. The
// oracle splices and fills trees with its own code and simply tries every
// candidate node, keeping the ones whose every future stays in order.

#include <cstddef>
#include <vector>

#include "dltag/tree.h"

namespace dltag {

struct OrderWitness {
  std::vector<const DiscourseUnit*> units;
  std::vector<std::size_t> seqs;

  bool holds() const;
};

// Units of the non-empty terminal frontier, left to right. Pointers are
// valid while `tree` is alive.
OrderWitness order_witness(const DiscourseTree& tree);

// True iff the non-empty terminal frontier's seq values strictly increase.
bool check_sequentiality(const DiscourseTree& tree);

// Every node at which adjoining `probe` leaves the tree in order and admits
// some order of filling all pending sites with fresh later units that keeps
// every intermediate tree in order. The probe's units are renumbered to
// follow the tree's. Sorted by id.
std::vector<NodeId> brute_force_adjoin_sites(const DiscourseTree& tree,
                                             const TreeTemplate& probe);

// Every substitution site whose filling with a fresh later unit still
// admits an in-order completion of the remaining sites. Sorted by id.
std::vector<NodeId> brute_force_substitution_targets(
    const DiscourseTree& tree);

// All valid derived trees (no foot) with 1..max_terminals terminals of
// which at most max_sites are substitution sites. Relations are labelled
// "R", leaves u0, u1, ... in text order.
std::vector<DiscourseTree> enumerate_small_trees(std::size_t max_terminals,
                                                 std::size_t max_sites);

}  // namespace dltag
