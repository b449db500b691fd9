#pragma once

// Discourse units, nodes and binary discourse trees.
//
// Trees are persistent: nodes are immutable and shared between trees, and
// every rewrite copies only the path from the root to the changed node.
// Node ids are unique within one tree and survive rewrites, so an id taken
// from one tree can name the same node in any tree derived from it.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dltag/features.h"

namespace dltag {

struct NodeId {
  std::uint32_t value = 0;

  auto operator<=>(const NodeId&) const = default;
};

struct DiscourseUnit {
  std::string id;
  std::string text;
  std::size_t seq = 0;  // 0-based position in input order

  bool operator==(const DiscourseUnit&) const = default;
};

// Coherence relation name ("Contrast", "A/C", ...). Compared by exact
// string equality; the relation inventory is open.
class RelationLabel {
 public:
  RelationLabel() = default;
  explicit RelationLabel(std::string name) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }
  bool empty() const { return name_.empty(); }

  bool operator==(const RelationLabel&) const = default;
  auto operator<=>(const RelationLabel&) const = default;

 private:
  std::string name_;
};

enum class NodeKind { kRelation, kLeaf, kEmpty };
enum class EmptyRole { kFoot, kSubSite };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
  NodeId id;
  NodeKind kind = NodeKind::kLeaf;
  RelationLabel label;                // kRelation
  std::optional<DiscourseUnit> unit;  // kLeaf
  EmptyRole role = EmptyRole::kFoot;  // kEmpty
  int rank = 0;                       // kEmpty + kSubSite: the ↓n annotation
  FeatureMap features;
  NodePtr left;
  NodePtr right;

  bool is_terminal() const { return kind != NodeKind::kRelation; }
  bool is_leaf() const { return kind == NodeKind::kLeaf; }
  bool is_foot() const {
    return kind == NodeKind::kEmpty && role == EmptyRole::kFoot;
  }
  bool is_site() const {
    return kind == NodeKind::kEmpty && role == EmptyRole::kSubSite;
  }
};

// Node constructors. Ids are left at zero; DiscourseTree::adopt numbers them.
NodePtr make_relation(RelationLabel label, NodePtr left, NodePtr right,
                      FeatureMap features = {});
NodePtr make_leaf(DiscourseUnit unit, FeatureMap features = {});
NodePtr make_foot(FeatureMap features = {});
NodePtr make_site(int rank, FeatureMap features = {});

// Copy of `node` with one field replaced.
NodePtr with_children(const Node& node, NodePtr left, NodePtr right);
NodePtr with_features(const Node& node, FeatureMap features);
NodePtr with_label(const Node& node, RelationLabel label);

// Root-to-node path. nodes.front() is the root and nodes.back() the target.
struct NodePath {
  std::vector<NodePtr> nodes;

  const NodePtr& target() const { return nodes.back(); }
  std::size_t depth() const { return nodes.size() - 1; }
  // Parent of the target, or nullptr for the root.
  const Node* parent() const {
    return nodes.size() < 2 ? nullptr : nodes[nodes.size() - 2].get();
  }
};

struct TerminalInfo {
  NodePtr node;
  const Node* parent = nullptr;
  std::size_t depth = 0;
  bool is_right_child = false;
};

class DiscourseTree {
 public:
  // The empty tree (no units consumed yet).
  DiscourseTree() = default;

  // Numbers the nodes of a freshly built graph 0..n-1 in pre-order and
  // leaves substitution-site ranks as given.
  static DiscourseTree adopt(NodePtr root);

  // Wraps a graph whose ids are already assigned. `next_id` must exceed
  // every id in the graph.
  static DiscourseTree from_parts(NodePtr root, NodeId next_id, int next_rank);

  bool empty() const { return root_ == nullptr; }
  const NodePtr& root() const { return root_; }
  NodeId next_id() const { return next_id_; }
  // Rank the next grafted substitution site receives.
  int next_rank() const { return next_rank_; }

  std::size_t size() const;
  const Node* find(NodeId id) const;
  std::optional<NodePath> path_to(NodeId id) const;

  // Every node in pre-order.
  std::vector<const Node*> nodes() const;

 private:
  NodePtr root_;
  NodeId next_id_{0};
  int next_rank_ = 1;
};

// Rebuilds the path with its target swapped for `replacement`, sharing all
// untouched subtrees. Returns the new root.
NodePtr replace_at(const NodePath& path, NodePtr replacement);

// In-order listing of all terminals, empty ones included.
std::vector<NodePtr> terminal_frontier(const DiscourseTree& tree);

// Terminals with their depth and parent, in frontier order.
std::vector<TerminalInfo> terminals_with_depth(const DiscourseTree& tree);

// Single-node tree whose root is the leaf for `unit`.
DiscourseTree new_leaf_tree(DiscourseUnit unit);

// Node-for-node equality: ids, kinds, labels, units, ranks and features,
// plus the id and rank counters.
bool identical(const DiscourseTree& a, const DiscourseTree& b);

// Same shape, relation labels and leaf unit ids in the same order; node ids,
// features and site ranks are ignored.
bool same_structure(const DiscourseTree& a, const DiscourseTree& b);

enum class TemplateCategory { kElementary, kAuxiliary };

struct TreeTemplate {
  TemplateCategory category = TemplateCategory::kElementary;
  DiscourseTree shape;
};

// Validated constructors; throw Error(kInvalidTemplate) listing violations.
TreeTemplate make_elementary(NodePtr root);
TreeTemplate make_auxiliary(NodePtr root);

enum class ViolationKind {
  kNonBinary,
  kChildrenOnTerminal,
  kEmptyLabel,
  kLeafWithoutUnit,
  kDuplicateNodeId,
  kDuplicateSeq,
  kMultipleFeet,
  kFootNotLeftmost,
  kSiteNotRightmost,
  kMaterialRightOfSite,
  kSiteDepthTie,
  kFootLeftSisterOfSite,
  kElementaryHasFoot,
  kElementaryWithoutLeaf,
  kAuxiliaryWithoutFoot,
  kAuxiliaryRootNotRelation,
  kAuxiliaryWithoutMaterial,
  kBetaAuxiliary,
};

struct Violation {
  ViolationKind kind;
  NodeId node;
  std::string message;
};

struct ValidationOptions {
  // Auxiliary trees whose site hangs off a subtree containing the foot,
  // R(R'(*, u), ↓). Representable; the bundled lexicon never builds them.
  bool reject_beta_auxiliary = false;
  bool forbid_foot_left_sister_of_site = true;
};

std::vector<Violation> validate(const DiscourseTree& tree,
                                const ValidationOptions& options = {});
std::vector<Violation> validate(const TreeTemplate& templ,
                                const ValidationOptions& options = {});

}  // namespace dltag
