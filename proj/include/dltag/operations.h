#pragma once

#include <optional>
#include <string>

#include "dltag/tree.h"

namespace dltag {

// Feature keys the grammar itself reads.
inline constexpr const char* kExpectsFeature = "expects";  // on sites
inline constexpr const char* kCoercedFeature = "coerced";  // on coerced roots
inline constexpr const char* kCoercedOpen = "yes";
inline constexpr const char* kCoercedRespecified = "respecified";

// Label used when coercion is not told which relation to synthesize.
RelationLabel default_coercion_relation();

enum class ActionKind { kSeed, kAdjoin, kSubstitute, kCoerceThenAdjoin };

const char* action_kind_name(ActionKind kind);

struct AttachmentAction {
  ActionKind op = ActionKind::kSeed;
  // Adjoining site, or the substitution site filled. Unused for kSeed.
  NodeId site;
  // Auxiliary tree for kAdjoin, elementary tree otherwise.
  TreeTemplate templ;
  // kCoerceThenAdjoin: the synthesized relation. kSubstitute with
  // `respecified`: the label given to that coerced relation node.
  RelationLabel relation;
  std::optional<NodeId> respecified;
};

// Starts a discourse from an elementary tree. `tree` must be empty.
DiscourseTree seed(const DiscourseTree& tree, const TreeTemplate& elementary);

// Splices `aux` in at `site`: the subtree there moves under the foot and the
// auxiliary root takes its place. Site features unify with the foot's.
// Errors: kIllegalSite when `site` is off the governing right frontier,
// kFeatureConflict, kInvalidTemplate.
DiscourseTree adjoin(const DiscourseTree& tree, NodeId site,
                     const TreeTemplate& aux);

// Fills the most embedded substitution site with `structure`, unifying the
// site's features with the structure root's.
// Errors: kNoSite, kSiteMismatch (explicit `site` is not the most embedded
// one), kFeatureConflict, kInvalidTemplate.
DiscourseTree substitute(const DiscourseTree& tree,
                         const TreeTemplate& structure,
                         std::optional<NodeId> site = std::nullopt);

// Relation(*, elem) with the root marked as coerced.
TreeTemplate coerce_to_auxiliary(
    const TreeTemplate& elem,
    const RelationLabel& relation = default_coercion_relation());

// Nearest coerced, not yet respecified relation above `site` whose right
// spine leads down to it; nullptr when there is none.
NodePtr open_coerced_ancestor(const DiscourseTree& tree, NodeId site);

// Relabels an open coerced relation node. Errors: kIllegalSite when `node`
// is not one.
DiscourseTree respecify(const DiscourseTree& tree, NodeId node,
                        const RelationLabel& relation);

// Applies one recorded action.
DiscourseTree apply(const DiscourseTree& tree, const AttachmentAction& action);

}  // namespace dltag
