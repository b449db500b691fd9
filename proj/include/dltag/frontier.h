#pragma once

// Right frontiers and the attachment sites they license.
//
// Without pending substitution sites, adjoining is confined to the outer
// right frontier (root down to the rightmost leaf). Once a site is pending,
// the frontier is re-rooted at the left sister of the most embedded site,
// and substitution may only fill that most embedded site.

#include <algorithm>
#include <vector>

#include "dltag/tree.h"

namespace dltag {

// Ordered node ids from the frontier root down to a terminal; each element
// is the parent of the next.
struct FrontierPath {
  std::vector<NodeId> nodes;

  bool empty() const { return nodes.empty(); }
  bool contains(NodeId id) const {
    return std::find(nodes.begin(), nodes.end(), id) != nodes.end();
  }
  bool operator==(const FrontierPath&) const = default;
};

FrontierPath outer_rf(const DiscourseTree& tree);

// Deepest substitution site, or nullptr if the tree has none. Throws
// Error(kAmbiguousSiteDepth) when two sites tie at the maximal depth.
NodePtr most_embedded_site(const DiscourseTree& tree);

// Right frontier rooted at the left sister of the most embedded site.
// Throws Error(kNoSubstitutionSite) on a siteless tree.
FrontierPath inner_rf(const DiscourseTree& tree);

// inner_rf when a site is pending, outer_rf otherwise; empty for the empty
// tree. Ordered top-down, so the last element is the lowest legal site.
FrontierPath adjoin_sites(const DiscourseTree& tree);

// The only node substitution may fill: the most embedded site.
NodePtr substitution_target(const DiscourseTree& tree);

// Substitution sites ordered by depth, deepest last.
std::vector<NodeId> pending_sites(const DiscourseTree& tree);

}  // namespace dltag
