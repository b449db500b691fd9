#include "dltag/sequentiality.h"

#include <algorithm>
#include <bit>
#include <functional>

namespace dltag {

namespace {

// Probe and filler nodes live above every id a small tree can use.
constexpr std::uint32_t kFreshIdBase = 0x40000000u;

void leaves_in_order(const Node* node, std::vector<const Node*>& out) {
  if (!node) return;
  if (node->kind == NodeKind::kRelation) {
    leaves_in_order(node->left.get(), out);
    leaves_in_order(node->right.get(), out);
  } else if (node->is_leaf()) {
    out.push_back(node);
  }
}

void sites_of(const Node* node, std::vector<NodeId>& out) {
  if (!node) return;
  if (node->is_site()) out.push_back(node->id);
  sites_of(node->left.get(), out);
  sites_of(node->right.get(), out);
}

void ids_of(const Node* node, std::vector<NodeId>& out) {
  if (!node) return;
  out.push_back(node->id);
  ids_of(node->left.get(), out);
  ids_of(node->right.get(), out);
}

std::size_t max_seq(const Node* root) {
  std::vector<const Node*> leaves;
  leaves_in_order(root, leaves);
  std::size_t best = 0;
  for (auto* leaf : leaves) best = std::max(best, leaf->unit->seq);
  return best;
}

bool in_order(const Node* root) {
  std::vector<const Node*> leaves;
  leaves_in_order(root, leaves);
  for (std::size_t i = 1; i < leaves.size(); ++i) {
    if (leaves[i - 1]->unit->seq >= leaves[i]->unit->seq) return false;
  }
  return true;
}

// Rebuilds `node` with the node `target` swapped for make(target).
NodePtr rewrite(const NodePtr& node, NodeId target,
                const std::function<NodePtr(const NodePtr&)>& make) {
  if (!node) return nullptr;
  if (node->id == target) return make(node);
  if (node->kind != NodeKind::kRelation) return node;
  auto copy = std::make_shared<Node>(*node);
  copy->left = rewrite(node->left, target, make);
  copy->right = rewrite(node->right, target, make);
  return copy;
}

// Copy of the probe with fresh ids, the foot replaced by `excised` and
// leaves renumbered from `first_seq`.
NodePtr instantiate_probe(const NodePtr& node, const NodePtr& excised,
                          std::uint32_t& next_id, std::size_t& next_seq) {
  if (node->is_foot()) return excised;
  auto copy = std::make_shared<Node>(*node);
  copy->id = NodeId{next_id++};
  if (copy->is_leaf()) {
    copy->unit = DiscourseUnit{copy->unit->id, copy->unit->text, next_seq++};
  }
  if (node->kind == NodeKind::kRelation) {
    copy->left = instantiate_probe(node->left, excised, next_id, next_seq);
    copy->right = instantiate_probe(node->right, excised, next_id, next_seq);
  }
  return copy;
}

NodePtr fill(const NodePtr& root, NodeId site, std::uint32_t& next_id,
             std::size_t seq) {
  return rewrite(root, site, [&](const NodePtr&) {
    auto leaf = std::make_shared<Node>();
    leaf->kind = NodeKind::kLeaf;
    leaf->id = NodeId{next_id++};
    leaf->unit = DiscourseUnit{"fill" + std::to_string(seq), "", seq};
    return NodePtr(leaf);
  });
}

// Is there an order of filling the remaining sites, one fresh unit at a
// time, that keeps every intermediate tree in order?
bool completable(const NodePtr& root, std::uint32_t next_id,
                 std::size_t next_seq) {
  if (!in_order(root.get())) return false;
  std::vector<NodeId> sites;
  sites_of(root.get(), sites);
  if (sites.empty()) return true;
  for (NodeId site : sites) {
    std::uint32_t id = next_id;
    NodePtr filled = fill(root, site, id, next_seq);
    if (completable(filled, id, next_seq + 1)) return true;
  }
  return false;
}

}  // namespace

bool OrderWitness::holds() const {
  for (std::size_t i = 1; i < seqs.size(); ++i) {
    if (seqs[i - 1] >= seqs[i]) return false;
  }
  return true;
}

OrderWitness order_witness(const DiscourseTree& tree) {
  std::vector<const Node*> leaves;
  leaves_in_order(tree.root().get(), leaves);
  OrderWitness w;
  for (const Node* leaf : leaves) {
    w.units.push_back(&*leaf->unit);
    w.seqs.push_back(leaf->unit->seq);
  }
  return w;
}

bool check_sequentiality(const DiscourseTree& tree) {
  return in_order(tree.root().get());
}

std::vector<NodeId> brute_force_adjoin_sites(const DiscourseTree& tree,
                                             const TreeTemplate& probe) {
  std::vector<NodeId> candidates;
  ids_of(tree.root().get(), candidates);
  const std::size_t first_seq =
      tree.empty() ? 0 : max_seq(tree.root().get()) + 1;

  std::vector<NodeId> out;
  for (NodeId candidate : candidates) {
    std::uint32_t next_id = kFreshIdBase;
    std::size_t next_seq = first_seq;
    NodePtr spliced = rewrite(tree.root(), candidate, [&](const NodePtr& at) {
      return instantiate_probe(probe.shape.root(), at, next_id, next_seq);
    });
    if (completable(spliced, next_id, next_seq)) out.push_back(candidate);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NodeId> brute_force_substitution_targets(
    const DiscourseTree& tree) {
  std::vector<NodeId> sites;
  sites_of(tree.root().get(), sites);
  const std::size_t seq = tree.empty() ? 0 : max_seq(tree.root().get()) + 1;

  std::vector<NodeId> out;
  for (NodeId site : sites) {
    std::uint32_t next_id = kFreshIdBase;
    NodePtr filled = fill(tree.root(), site, next_id, seq);
    if (completable(filled, next_id, seq + 1)) out.push_back(site);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// All binary shapes with n terminals; terminals are bare placeholders.
std::vector<NodePtr> shapes(std::size_t n,
                            std::vector<std::vector<NodePtr>>& memo) {
  if (memo.size() > n && !memo[n].empty()) return memo[n];
  std::vector<NodePtr> out;
  if (n == 1) {
    out.push_back(std::make_shared<Node>());
  } else {
    for (std::size_t left = 1; left < n; ++left) {
      for (const auto& l : shapes(left, memo)) {
        for (const auto& r : shapes(n - left, memo)) {
          auto node = std::make_shared<Node>();
          node->kind = NodeKind::kRelation;
          node->label = RelationLabel("R");
          node->left = l;
          node->right = r;
          out.push_back(node);
        }
      }
    }
  }
  if (memo.size() <= n) memo.resize(n + 1);
  memo[n] = out;
  return out;
}

// Copies a shape, turning terminal i (in order) into a site when bit i of
// `site_mask` is set and into the next leaf otherwise.
NodePtr decorate(const NodePtr& shape, std::uint64_t site_mask,
                 std::size_t& index, std::size_t& seq, int& rank) {
  auto node = std::make_shared<Node>(*shape);
  if (shape->kind == NodeKind::kRelation) {
    node->left = decorate(shape->left, site_mask, index, seq, rank);
    node->right = decorate(shape->right, site_mask, index, seq, rank);
    return node;
  }
  if (site_mask >> index++ & 1u) {
    node->kind = NodeKind::kEmpty;
    node->role = EmptyRole::kSubSite;
    node->rank = rank++;
  } else {
    node->kind = NodeKind::kLeaf;
    node->unit = DiscourseUnit{"u" + std::to_string(seq), "", seq};
    ++seq;
  }
  return node;
}

}  // namespace

std::vector<DiscourseTree> enumerate_small_trees(std::size_t max_terminals,
                                                 std::size_t max_sites) {
  std::vector<std::vector<NodePtr>> memo;
  std::vector<DiscourseTree> out;
  for (std::size_t n = 1; n <= max_terminals; ++n) {
    for (const auto& shape : shapes(n, memo)) {
      // Every placement of up to max_sites sites; validation keeps the
      // legal ones.
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const auto k = static_cast<std::size_t>(std::popcount(mask));
        if (k > max_sites || k == n) continue;
        std::size_t index = 0;
        std::size_t seq = 0;
        int rank = 1;
        DiscourseTree tree =
            DiscourseTree::adopt(decorate(shape, mask, index, seq, rank));
        if (validate(tree).empty()) out.push_back(std::move(tree));
      }
    }
  }
  return out;
}

}  // namespace dltag
