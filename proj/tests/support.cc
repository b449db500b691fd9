#include "support.h"

#include <functional>

namespace dltag::testing {

std::string source_path(const std::string& relative) {
  return std::string(DLTAG_SOURCE_DIR) + "/" + relative;
}

namespace {

void walk(const Node* node, std::size_t depth,
          const std::function<void(const Node*, std::size_t)>& visit) {
  if (!node) return;
  visit(node, depth);
  walk(node->left.get(), depth + 1, visit);
  walk(node->right.get(), depth + 1, visit);
}

// Marker combinations a clause may carry.
const std::vector<std::vector<std::string>>& marker_draws() {
  static const std::vector<std::vector<std::string>> draws = {
      {},
      {},
      {"on-the-one-hand"},
      {"suppose"},
      {"because"},
      {"although"},
      {"when"},
      {"on-the-other-hand"},
      {"on-the-other-hand", "suppose"},
      {"but"},
      {"but", "if"},
      {"or"},
      {"for-example"},
      {"for-example", "suppose"},
      {"for-example:final"},
      {"at-the-same-time"},
  };
  return draws;
}

}  // namespace

const Node* deepest_site_by_walk(const DiscourseTree& tree) {
  const Node* best = nullptr;
  std::size_t best_depth = 0;
  walk(tree.root().get(), 0, [&](const Node* n, std::size_t d) {
    if (n->is_site() && (!best || d > best_depth)) {
      best = n;
      best_depth = d;
    }
  });
  return best;
}

std::vector<std::size_t> site_depths(const DiscourseTree& tree) {
  std::vector<std::size_t> out;
  walk(tree.root().get(), 0, [&](const Node* n, std::size_t d) {
    if (n->is_site()) out.push_back(d);
  });
  return out;
}

RandomDerivation random_derivation(std::mt19937_64& rng, std::size_t units) {
  const Lexicon& lex = Lexicon::bundled();
  const auto& draws = marker_draws();
  RandomDerivation out;
  ParserState state;
  for (std::size_t k = 0; k < units; ++k) {
    const std::string id = "u" + std::to_string(k);
    std::vector<ParserState> next;
    UnitInput unit;
    for (int attempt = 0; attempt < 4 && next.empty(); ++attempt) {
      const auto& markers =
          attempt == 3 ? draws.front()
                       : draws[std::uniform_int_distribution<std::size_t>(
                             0, draws.size() - 1)(rng)];
      unit = make_unit_with_markers(id, id, k, markers, lex);
      next = successors(state, unit, ParseMode::kEnumerate);
    }
    const auto pick =
        std::uniform_int_distribution<std::size_t>(0, next.size() - 1)(rng);
    out.steps.push_back(
        {unit, state.tree, next[pick].history.back(), next[pick].tree});
    state = std::move(next[pick]);
  }
  return out;
}

}  // namespace dltag::testing
