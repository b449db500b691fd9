#include "dltag/operations.h"

#include "dltag/error.h"
#include "dltag/frontier.h"
#include "dltag/serialize.h"

namespace dltag {

RelationLabel default_coercion_relation() {
  return RelationLabel("Elaboration");
}

const char* action_kind_name(ActionKind kind) {
  switch (kind) {
    case ActionKind::kSeed: return "seed";
    case ActionKind::kAdjoin: return "adjoin";
    case ActionKind::kSubstitute: return "substitute";
    case ActionKind::kCoerceThenAdjoin: return "coerce-adjoin";
  }
  return "?";
}

namespace {

struct Counters {
  std::uint32_t next_id;
  int next_rank;
};

// Copies a template subtree into the id space of a target tree. Sites get
// ranks in left-to-right order; the foot, if any, is replaced by
// `foot_replacement` without consuming an id.
NodePtr graft(const NodePtr& node, Counters& counters,
              const NodePtr& foot_replacement) {
  if (node->is_foot()) return foot_replacement;
  auto copy = std::make_shared<Node>(*node);
  copy->id = NodeId{counters.next_id++};
  if (copy->is_site()) copy->rank = counters.next_rank++;
  if (node->kind == NodeKind::kRelation) {
    copy->left = graft(node->left, counters, foot_replacement);
    copy->right = graft(node->right, counters, foot_replacement);
  }
  return copy;
}

void require_valid(const TreeTemplate& templ, TemplateCategory category) {
  if (templ.category != category) {
    throw Error(ErrorCode::kInvalidTemplate,
                category == TemplateCategory::kAuxiliary
                    ? "adjoining needs an auxiliary tree"
                    : "expected an elementary tree");
  }
  auto violations = validate(templ);
  if (!violations.empty()) {
    throw Error(ErrorCode::kInvalidTemplate,
                "invalid template: " + violations.front().message);
  }
}

FeatureMap unify_or_throw(const FeatureMap& a, const FeatureMap& b,
                          const std::string& where) {
  auto result = unify_features(a, b);
  if (auto* conflict = std::get_if<FeatureConflict>(&result)) {
    throw Error(ErrorCode::kFeatureConflict,
                "feature conflict at " + where + " on '" + conflict->key +
                    "': " + conflict->left + " vs " + conflict->right);
  }
  return std::get<FeatureMap>(std::move(result));
}

NodePtr find_foot(const NodePtr& node) {
  if (!node) return nullptr;
  if (node->is_foot()) return node;
  if (auto f = find_foot(node->left)) return f;
  return find_foot(node->right);
}

}  // namespace

DiscourseTree seed(const DiscourseTree& tree, const TreeTemplate& elementary) {
  if (!tree.empty()) {
    throw Error(ErrorCode::kIllegalSite, "seeding a non-empty discourse");
  }
  require_valid(elementary, TemplateCategory::kElementary);
  Counters counters{tree.next_id().value, tree.next_rank()};
  NodePtr root = graft(elementary.shape.root(), counters, nullptr);
  return DiscourseTree::from_parts(root, NodeId{counters.next_id},
                                   counters.next_rank);
}

DiscourseTree adjoin(const DiscourseTree& tree, NodeId site,
                     const TreeTemplate& aux) {
  require_valid(aux, TemplateCategory::kAuxiliary);
  if (!adjoin_sites(tree).contains(site)) {
    throw Error(ErrorCode::kIllegalSite,
                "node #" + std::to_string(site.value) +
                    " is not on the governing right frontier");
  }
  auto path = tree.path_to(site);
  const NodePtr& excised = path->target();
  NodePtr foot = find_foot(aux.shape.root());
  FeatureMap junction =
      unify_or_throw(excised->features, foot->features,
                     "adjoining site " + describe(*excised));

  Counters counters{tree.next_id().value, tree.next_rank()};
  NodePtr grafted = graft(aux.shape.root(), counters,
                          with_features(*excised, std::move(junction)));
  return DiscourseTree::from_parts(replace_at(*path, grafted),
                                   NodeId{counters.next_id},
                                   counters.next_rank);
}

DiscourseTree substitute(const DiscourseTree& tree,
                         const TreeTemplate& structure,
                         std::optional<NodeId> site) {
  require_valid(structure, TemplateCategory::kElementary);
  NodePtr target = substitution_target(tree);
  if (!target) {
    throw Error(ErrorCode::kNoSite, "no pending substitution site");
  }
  if (site && *site != target->id) {
    throw Error(ErrorCode::kSiteMismatch,
                "node #" + std::to_string(site->value) +
                    " is not the most embedded substitution site");
  }
  FeatureMap merged =
      unify_or_throw(target->features, structure.shape.root()->features,
                     "substitution site " + describe(*target));

  Counters counters{tree.next_id().value, tree.next_rank()};
  NodePtr grafted = graft(structure.shape.root(), counters, nullptr);
  grafted = with_features(*grafted, std::move(merged));
  auto path = tree.path_to(target->id);
  return DiscourseTree::from_parts(replace_at(*path, grafted),
                                   NodeId{counters.next_id},
                                   counters.next_rank);
}

TreeTemplate coerce_to_auxiliary(const TreeTemplate& elem,
                                 const RelationLabel& relation) {
  require_valid(elem, TemplateCategory::kElementary);
  return make_auxiliary(make_relation(relation, make_foot(),
                                      elem.shape.root(),
                                      {{kCoercedFeature, kCoercedOpen}}));
}

NodePtr open_coerced_ancestor(const DiscourseTree& tree, NodeId site) {
  auto path = tree.path_to(site);
  if (!path) return nullptr;
  for (std::size_t i = path->nodes.size() - 1; i > 0; --i) {
    const NodePtr& parent = path->nodes[i - 1];
    if (parent->right != path->nodes[i]) break;
    auto it = parent->features.find(kCoercedFeature);
    if (it != parent->features.end() && it->second == kCoercedOpen) {
      return parent;
    }
  }
  return nullptr;
}

DiscourseTree respecify(const DiscourseTree& tree, NodeId node,
                        const RelationLabel& relation) {
  auto path = tree.path_to(node);
  const Node* target = path ? path->target().get() : nullptr;
  auto it = target ? target->features.find(kCoercedFeature)
                   : FeatureMap::const_iterator{};
  if (!target || target->kind != NodeKind::kRelation ||
      it == target->features.end() || it->second != kCoercedOpen) {
    throw Error(ErrorCode::kIllegalSite,
                "node #" + std::to_string(node.value) +
                    " is not an open coerced relation");
  }
  FeatureMap features = target->features;
  features[kCoercedFeature] = kCoercedRespecified;
  NodePtr relabeled = with_label(*target, relation);
  relabeled = with_features(*relabeled, std::move(features));
  return DiscourseTree::from_parts(replace_at(*path, relabeled),
                                   tree.next_id(), tree.next_rank());
}

DiscourseTree apply(const DiscourseTree& tree, const AttachmentAction& action) {
  switch (action.op) {
    case ActionKind::kSeed:
      return seed(tree, action.templ);
    case ActionKind::kAdjoin:
      return adjoin(tree, action.site, action.templ);
    case ActionKind::kCoerceThenAdjoin:
      return adjoin(tree, action.site,
                    coerce_to_auxiliary(action.templ, action.relation));
    case ActionKind::kSubstitute: {
      DiscourseTree out = substitute(tree, action.templ, action.site);
      if (action.respecified) {
        out = respecify(out, *action.respecified, action.relation);
      }
      return out;
    }
  }
  throw Error(ErrorCode::kIllegalAction, "unknown action");
}

}  // namespace dltag
