#include "dltag/tree.h"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "dltag/error.h"

namespace dltag {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIllegalSite: return "illegal-site";
    case ErrorCode::kFeatureConflict: return "feature-conflict";
    case ErrorCode::kNoSite: return "no-site";
    case ErrorCode::kSiteMismatch: return "explicit-site-mismatch";
    case ErrorCode::kNoSubstitutionSite: return "no-substitution-site";
    case ErrorCode::kAmbiguousSiteDepth: return "ambiguous-site-depth";
    case ErrorCode::kInvalidTemplate: return "invalid-template";
    case ErrorCode::kInvalidTree: return "invalid-tree";
    case ErrorCode::kDeadEnd: return "dead-end";
    case ErrorCode::kIllegalAction: return "illegal-action";
    case ErrorCode::kFormat: return "format";
    case ErrorCode::kIo: return "io";
  }
  return "unknown";
}

NodePtr make_relation(RelationLabel label, NodePtr left, NodePtr right,
                      FeatureMap features) {
  auto node = std::make_shared<Node>();
  node->kind = NodeKind::kRelation;
  node->label = std::move(label);
  node->left = std::move(left);
  node->right = std::move(right);
  node->features = std::move(features);
  return node;
}

NodePtr make_leaf(DiscourseUnit unit, FeatureMap features) {
  auto node = std::make_shared<Node>();
  node->kind = NodeKind::kLeaf;
  node->unit = std::move(unit);
  node->features = std::move(features);
  return node;
}

NodePtr make_foot(FeatureMap features) {
  auto node = std::make_shared<Node>();
  node->kind = NodeKind::kEmpty;
  node->role = EmptyRole::kFoot;
  node->features = std::move(features);
  return node;
}

NodePtr make_site(int rank, FeatureMap features) {
  auto node = std::make_shared<Node>();
  node->kind = NodeKind::kEmpty;
  node->role = EmptyRole::kSubSite;
  node->rank = rank;
  node->features = std::move(features);
  return node;
}

NodePtr with_children(const Node& node, NodePtr left, NodePtr right) {
  auto copy = std::make_shared<Node>(node);
  copy->left = std::move(left);
  copy->right = std::move(right);
  return copy;
}

NodePtr with_features(const Node& node, FeatureMap features) {
  auto copy = std::make_shared<Node>(node);
  copy->features = std::move(features);
  return copy;
}

NodePtr with_label(const Node& node, RelationLabel label) {
  auto copy = std::make_shared<Node>(node);
  copy->label = std::move(label);
  return copy;
}

namespace {

NodePtr renumber(const NodePtr& node, std::uint32_t& next, int& max_rank) {
  if (!node) return nullptr;
  auto copy = std::make_shared<Node>(*node);
  copy->id = NodeId{next++};
  if (copy->is_site()) max_rank = std::max(max_rank, copy->rank);
  copy->left = renumber(node->left, next, max_rank);
  copy->right = renumber(node->right, next, max_rank);
  return copy;
}

void preorder(const Node* node, std::vector<const Node*>& out) {
  if (!node) return;
  out.push_back(node);
  preorder(node->left.get(), out);
  preorder(node->right.get(), out);
}

bool find_path(const NodePtr& node, NodeId id, std::vector<NodePtr>& path) {
  if (!node) return false;
  path.push_back(node);
  if (node->id == id) return true;
  if (find_path(node->left, id, path) || find_path(node->right, id, path)) {
    return true;
  }
  path.pop_back();
  return false;
}

void collect_terminals(const NodePtr& node, const Node* parent,
                       std::size_t depth, std::vector<TerminalInfo>& out) {
  if (!node) return;
  if (node->is_terminal()) {
    out.push_back({node, parent, depth,
                   parent != nullptr && parent->right == node});
    return;
  }
  collect_terminals(node->left, node.get(), depth + 1, out);
  collect_terminals(node->right, node.get(), depth + 1, out);
}

bool identical_nodes(const Node* a, const Node* b) {
  if (a == nullptr || b == nullptr) return a == b;
  if (a->id != b->id || a->kind != b->kind || a->features != b->features) {
    return false;
  }
  switch (a->kind) {
    case NodeKind::kRelation:
      if (a->label != b->label) return false;
      break;
    case NodeKind::kLeaf:
      if (a->unit != b->unit) return false;
      break;
    case NodeKind::kEmpty:
      if (a->role != b->role || a->rank != b->rank) return false;
      break;
  }
  return identical_nodes(a->left.get(), b->left.get()) &&
         identical_nodes(a->right.get(), b->right.get());
}

bool same_structure_nodes(const Node* a, const Node* b) {
  if (a == nullptr || b == nullptr) return a == b;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case NodeKind::kRelation:
      if (a->label != b->label) return false;
      break;
    case NodeKind::kLeaf:
      if (a->unit->id != b->unit->id) return false;
      break;
    case NodeKind::kEmpty:
      if (a->role != b->role) return false;
      break;
  }
  return same_structure_nodes(a->left.get(), b->left.get()) &&
         same_structure_nodes(a->right.get(), b->right.get());
}

std::string node_tag(const Node& node) {
  std::ostringstream out;
  out << "node #" << node.id.value;
  return out.str();
}

}  // namespace

DiscourseTree DiscourseTree::adopt(NodePtr root) {
  std::uint32_t next = 0;
  int max_rank = 0;
  DiscourseTree tree;
  tree.root_ = renumber(root, next, max_rank);
  tree.next_id_ = NodeId{next};
  tree.next_rank_ = max_rank + 1;
  return tree;
}

DiscourseTree DiscourseTree::from_parts(NodePtr root, NodeId next_id,
                                        int next_rank) {
  DiscourseTree tree;
  tree.root_ = std::move(root);
  tree.next_id_ = next_id;
  tree.next_rank_ = next_rank;
  return tree;
}

std::size_t DiscourseTree::size() const { return nodes().size(); }

std::vector<const Node*> DiscourseTree::nodes() const {
  std::vector<const Node*> out;
  preorder(root_.get(), out);
  return out;
}

const Node* DiscourseTree::find(NodeId id) const {
  for (const Node* node : nodes()) {
    if (node->id == id) return node;
  }
  return nullptr;
}

std::optional<NodePath> DiscourseTree::path_to(NodeId id) const {
  NodePath path;
  if (!find_path(root_, id, path.nodes)) return std::nullopt;
  return path;
}

NodePtr replace_at(const NodePath& path, NodePtr replacement) {
  NodePtr current = std::move(replacement);
  for (std::size_t i = path.nodes.size() - 1; i > 0; --i) {
    const Node& parent = *path.nodes[i - 1];
    const NodePtr& child = path.nodes[i];
    current = parent.left == child
                  ? with_children(parent, std::move(current), parent.right)
                  : with_children(parent, parent.left, std::move(current));
  }
  return current;
}

std::vector<NodePtr> terminal_frontier(const DiscourseTree& tree) {
  std::vector<NodePtr> out;
  for (auto& info : terminals_with_depth(tree)) out.push_back(info.node);
  return out;
}

std::vector<TerminalInfo> terminals_with_depth(const DiscourseTree& tree) {
  std::vector<TerminalInfo> out;
  collect_terminals(tree.root(), nullptr, 0, out);
  return out;
}

DiscourseTree new_leaf_tree(DiscourseUnit unit) {
  return DiscourseTree::adopt(make_leaf(std::move(unit)));
}

bool identical(const DiscourseTree& a, const DiscourseTree& b) {
  return a.next_id() == b.next_id() && a.next_rank() == b.next_rank() &&
         identical_nodes(a.root().get(), b.root().get());
}

bool same_structure(const DiscourseTree& a, const DiscourseTree& b) {
  return same_structure_nodes(a.root().get(), b.root().get());
}

std::vector<Violation> validate(const DiscourseTree& tree,
                                const ValidationOptions& options) {
  std::vector<Violation> out;
  auto report = [&](ViolationKind kind, const Node& node, std::string msg) {
    out.push_back({kind, node.id, msg + " (" + node_tag(node) + ")"});
  };

  std::set<NodeId> ids;
  std::set<std::size_t> seqs;
  for (const Node* node : tree.nodes()) {
    if (!ids.insert(node->id).second) {
      report(ViolationKind::kDuplicateNodeId, *node, "duplicate node id");
    }
    if (node->kind == NodeKind::kRelation) {
      if (!node->left || !node->right) {
        report(ViolationKind::kNonBinary, *node, "non-binary");
      }
      if (node->label.empty()) {
        report(ViolationKind::kEmptyLabel, *node, "empty relation label");
      }
    } else if (node->left || node->right) {
      report(ViolationKind::kChildrenOnTerminal, *node,
             "terminal with children");
    }
    if (node->is_leaf()) {
      if (!node->unit) {
        report(ViolationKind::kLeafWithoutUnit, *node, "leaf without unit");
      } else if (!seqs.insert(node->unit->seq).second) {
        report(ViolationKind::kDuplicateSeq, *node, "duplicate unit seq");
      }
    }
  }

  const auto terminals = terminals_with_depth(tree);
  std::size_t feet = 0;
  bool seen_site = false;
  std::size_t max_site_depth = 0;
  std::size_t sites_at_max = 0;
  for (std::size_t i = 0; i < terminals.size(); ++i) {
    const TerminalInfo& t = terminals[i];
    if (t.node->is_foot()) {
      if (++feet > 1) {
        report(ViolationKind::kMultipleFeet, *t.node, "multiple foot nodes");
      }
      if (i != 0) {
        report(ViolationKind::kFootNotLeftmost, *t.node, "foot not leftmost");
      }
    }
    if (t.node->is_site()) {
      if (!t.is_right_child) {
        report(ViolationKind::kSiteNotRightmost, *t.node,
               "substitution site not rightmost");
      } else if (options.forbid_foot_left_sister_of_site &&
                 t.parent->left && t.parent->left->is_foot()) {
        report(ViolationKind::kFootLeftSisterOfSite, *t.node,
               "foot is left sister of substitution site");
      }
      if (!seen_site || t.depth > max_site_depth) {
        max_site_depth = t.depth;
        sites_at_max = 1;
      } else if (t.depth == max_site_depth) {
        ++sites_at_max;
      }
      seen_site = true;
    } else if (seen_site && !t.node->is_foot()) {
      report(ViolationKind::kMaterialRightOfSite, *t.node,
             "non-empty terminal right of a substitution site");
    }
  }
  if (sites_at_max > 1) {
    for (const auto& t : terminals) {
      if (t.node->is_site() && t.depth == max_site_depth) {
        report(ViolationKind::kSiteDepthTie, *t.node,
               "substitution sites tie at maximal depth");
      }
    }
  }
  return out;
}

namespace {

bool contains_foot(const Node* node) {
  if (!node) return false;
  if (node->is_foot()) return true;
  return contains_foot(node->left.get()) || contains_foot(node->right.get());
}

}  // namespace

std::vector<Violation> validate(const TreeTemplate& templ,
                                const ValidationOptions& options) {
  auto out = validate(templ.shape, options);
  const auto terminals = terminals_with_depth(templ.shape);
  const bool has_leaf =
      std::any_of(terminals.begin(), terminals.end(),
                  [](const TerminalInfo& t) { return t.node->is_leaf(); });
  const auto foot = std::find_if(
      terminals.begin(), terminals.end(),
      [](const TerminalInfo& t) { return t.node->is_foot(); });
  const NodeId root_id =
      templ.shape.empty() ? NodeId{} : templ.shape.root()->id;

  if (templ.category == TemplateCategory::kElementary) {
    if (foot != terminals.end()) {
      out.push_back({ViolationKind::kElementaryHasFoot, foot->node->id,
                     "elementary tree with a foot node"});
    }
    if (!has_leaf) {
      out.push_back({ViolationKind::kElementaryWithoutLeaf, root_id,
                     "elementary tree without a non-empty leaf"});
    }
    return out;
  }

  if (foot == terminals.end()) {
    out.push_back({ViolationKind::kAuxiliaryWithoutFoot, root_id,
                   "auxiliary tree without a foot node"});
  }
  if (templ.shape.empty() ||
      templ.shape.root()->kind != NodeKind::kRelation) {
    out.push_back({ViolationKind::kAuxiliaryRootNotRelation, root_id,
                   "auxiliary root is not a relation"});
  }
  if (!has_leaf) {
    out.push_back({ViolationKind::kAuxiliaryWithoutMaterial, root_id,
                   "auxiliary tree without a non-empty node"});
  }
  if (options.reject_beta_auxiliary) {
    for (const auto& t : terminals) {
      if (t.node->is_site() && t.parent && contains_foot(t.parent->left.get())) {
        out.push_back({ViolationKind::kBetaAuxiliary, t.node->id,
                       "substitution site sister to the foot's subtree"});
      }
    }
  }
  return out;
}

namespace {

TreeTemplate checked(TemplateCategory category, NodePtr root) {
  TreeTemplate templ{category, DiscourseTree::adopt(std::move(root))};
  auto violations = validate(templ);
  if (!violations.empty()) {
    std::string msg = "invalid template:";
    for (auto& v : violations) msg += " " + v.message + ";";
    throw Error(ErrorCode::kInvalidTemplate, msg);
  }
  return templ;
}

}  // namespace

TreeTemplate make_elementary(NodePtr root) {
  return checked(TemplateCategory::kElementary, std::move(root));
}

TreeTemplate make_auxiliary(NodePtr root) {
  return checked(TemplateCategory::kAuxiliary, std::move(root));
}

}  // namespace dltag
