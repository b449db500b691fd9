#pragma once

// Two tree notations:
//
//   bracket   Contrast(a, A/C(b, ↓2))   leaves print as their unit id, `*` is
//             the foot and `↓n` a substitution site of rank n.
//   json      {"kind", "label" | "unit" | "role", "features", "children"}
//             per node, wrapped as {"next_id", "next_rank", "root"}.

#include <string>
#include <string_view>

#include "dltag/tree.h"
#include "json.hpp"

namespace dltag {

// "Contrast", "a", "*", "↓2".
std::string describe(const Node& node);

std::string to_bracket(const DiscourseTree& tree);
std::string to_bracket(const NodePtr& node);

// Leaves get seq numbers in left-to-right order and use their id as text.
// Throws Error(kFormat) with the offending column on malformed input.
DiscourseTree parse_bracket(std::string_view text);

nlohmann::json to_json(const DiscourseTree& tree);
nlohmann::json node_to_json(const Node& node);

// Accepts the wrapped tree object or a bare node object. Bare nodes and
// nodes without "id" fields are renumbered in pre-order.
DiscourseTree tree_from_json(const nlohmann::json& value);

// Reads either notation; JSON when the first non-blank character is '{'.
DiscourseTree parse_tree(std::string_view text);

}  // namespace dltag
