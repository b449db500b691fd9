#include "dltag/frontier.h"

#include "dltag/error.h"

namespace dltag {

namespace {

FrontierPath rightmost_path(const NodePtr& start) {
  FrontierPath path;
  for (const Node* node = start.get(); node != nullptr;
       node = node->right.get()) {
    path.nodes.push_back(node->id);
  }
  return path;
}

}  // namespace

FrontierPath outer_rf(const DiscourseTree& tree) {
  return rightmost_path(tree.root());
}

NodePtr most_embedded_site(const DiscourseTree& tree) {
  NodePtr best;
  std::size_t best_depth = 0;
  bool tie = false;
  for (const auto& t : terminals_with_depth(tree)) {
    if (!t.node->is_site()) continue;
    if (!best || t.depth > best_depth) {
      best = t.node;
      best_depth = t.depth;
      tie = false;
    } else if (t.depth == best_depth) {
      tie = true;
    }
  }
  if (tie) {
    throw Error(ErrorCode::kAmbiguousSiteDepth,
                "two substitution sites share the maximal depth");
  }
  return best;
}

FrontierPath inner_rf(const DiscourseTree& tree) {
  NodePtr site = most_embedded_site(tree);
  if (!site) {
    throw Error(ErrorCode::kNoSubstitutionSite,
                "inner right frontier needs a pending substitution site");
  }
  auto path = tree.path_to(site->id);
  const Node* parent = path->parent();
  if (parent == nullptr || parent->right != site || !parent->left) {
    throw Error(ErrorCode::kInvalidTree,
                "substitution site without a left sister");
  }
  return rightmost_path(parent->left);
}

FrontierPath adjoin_sites(const DiscourseTree& tree) {
  if (tree.empty()) return {};
  if (most_embedded_site(tree)) return inner_rf(tree);
  return outer_rf(tree);
}

NodePtr substitution_target(const DiscourseTree& tree) {
  return most_embedded_site(tree);
}

std::vector<NodeId> pending_sites(const DiscourseTree& tree) {
  std::vector<TerminalInfo> sites;
  for (auto& t : terminals_with_depth(tree)) {
    if (t.node->is_site()) sites.push_back(t);
  }
  std::stable_sort(sites.begin(), sites.end(),
                   [](const TerminalInfo& a, const TerminalInfo& b) {
                     return a.depth < b.depth;
                   });
  std::vector<NodeId> out;
  for (auto& t : sites) out.push_back(t.node->id);
  return out;
}

}  // namespace dltag
