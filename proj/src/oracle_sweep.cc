#include "dltag/oracle_sweep.h"

#include <omp.h>

#include <algorithm>

#include "dltag/error.h"
#include "dltag/frontier.h"
#include "dltag/sequentiality.h"
#include "dltag/serialize.h"

namespace dltag {

TreeTemplate leaf_probe() {
  return make_auxiliary(make_relation(RelationLabel("P"), make_foot(),
                                      make_leaf({"p", "probe", 0})));
}

TreeTemplate site_probe() {
  return make_auxiliary(make_relation(
      RelationLabel("P"), make_foot(),
      make_relation(RelationLabel("Q"), make_leaf({"p", "probe", 0}),
                    make_site(1))));
}

namespace {

std::string render(const DiscourseTree& tree, std::vector<NodeId> ids) {
  std::sort(ids.begin(), ids.end());
  std::string out = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ", ";
    const Node* node = tree.find(ids[i]);
    out += (node ? describe(*node) : "?") + "#" +
           std::to_string(ids[i].value);
  }
  return out + "}";
}

}  // namespace

std::vector<Counterexample> check_tree(const DiscourseTree& tree,
                                       std::size_t index) {
  std::vector<Counterexample> out;
  auto compare = [&](const std::string& check, std::vector<NodeId> expected,
                     std::vector<NodeId> actual) {
    std::sort(expected.begin(), expected.end());
    std::sort(actual.begin(), actual.end());
    if (expected != actual) {
      out.push_back({index, to_bracket(tree), check, render(tree, expected),
                     render(tree, actual)});
    }
  };

  std::vector<NodeId> closed_adjoin;
  std::vector<NodeId> closed_target;
  try {
    closed_adjoin = adjoin_sites(tree).nodes;
    if (NodePtr target = substitution_target(tree)) {
      closed_target.push_back(target->id);
    }
  } catch (const Error& e) {
    out.push_back({index, to_bracket(tree), "frontier", "answer", e.what()});
    return out;
  }

  compare("adjoin/leaf-probe", brute_force_adjoin_sites(tree, leaf_probe()),
          closed_adjoin);
  compare("adjoin/site-probe", brute_force_adjoin_sites(tree, site_probe()),
          closed_adjoin);
  compare("substitution", brute_force_substitution_targets(tree),
          closed_target);
  return out;
}

namespace {

SweepReport summarize(const std::vector<DiscourseTree>& trees,
                      std::vector<std::vector<Counterexample>>& per_tree) {
  SweepReport report;
  report.trees = trees.size();
  report.checks = trees.size() * 3;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    if (!pending_sites(trees[i]).empty()) ++report.trees_with_sites;
    for (auto& c : per_tree[i]) report.counterexamples.push_back(std::move(c));
  }
  return report;
}

}  // namespace

SweepReport sweep_serial(const SweepConfig& config) {
  const auto trees = enumerate_small_trees(config.max_terminals,
                                           config.max_sites);
  std::vector<std::vector<Counterexample>> per_tree(trees.size());
  for (std::size_t i = 0; i < trees.size(); ++i) {
    per_tree[i] = check_tree(trees[i], i);
  }
  return summarize(trees, per_tree);
}

SweepReport sweep_parallel(const SweepConfig& config, int threads) {
  const auto trees = enumerate_small_trees(config.max_terminals,
                                           config.max_sites);
  std::vector<std::vector<Counterexample>> per_tree(trees.size());
  const auto n = static_cast<std::int64_t>(trees.size());
  if (threads <= 0) threads = omp_get_max_threads();

  // check_tree catches the frontier's errors itself, so nothing throws
  // across the parallel region.
#pragma omp parallel for schedule(dynamic, 8) num_threads(threads)
  for (std::int64_t i = 0; i < n; ++i) {
    per_tree[i] = check_tree(trees[i], static_cast<std::size_t>(i));
  }
  return summarize(trees, per_tree);
}

}  // namespace dltag
