#include "dltag/serialize.h"

#include <algorithm>
#include <cctype>

#include "dltag/error.h"

namespace dltag {

namespace {

constexpr std::string_view kSiteMark = "\xE2\x86\x93";  // ↓

void write_bracket(const Node* node, std::string& out) {
  if (!node) {
    out += "?";
    return;
  }
  out += describe(*node);
  if (node->kind == NodeKind::kRelation) {
    out += "(";
    write_bracket(node->left.get(), out);
    out += ", ";
    write_bracket(node->right.get(), out);
    out += ")";
  }
}

class BracketReader {
 public:
  explicit BracketReader(std::string_view text) : text_(text) {}

  NodePtr read_tree() {
    NodePtr root = read_node();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::kFormat, "bracket notation: " + what +
                                        " at column " +
                                        std::to_string(pos_ + 1));
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool at(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!at(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string read_token() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '(' || c == ')' || c == ',' ||
          std::isspace(static_cast<unsigned char>(c))) {
        break;
      }
      ++pos_;
    }
    if (pos_ == start) fail("expected a node");
    return std::string(text_.substr(start, pos_ - start));
  }

  NodePtr read_node() {
    std::string token = read_token();
    if (at('(')) {
      ++pos_;
      NodePtr left = read_node();
      expect(',');
      NodePtr right = read_node();
      expect(')');
      return make_relation(RelationLabel(token), std::move(left),
                           std::move(right));
    }
    if (token == "*") return make_foot();
    if (token.starts_with(kSiteMark)) {
      const std::string digits = token.substr(kSiteMark.size());
      if (digits.empty()) return make_site(1);
      if (!std::all_of(digits.begin(), digits.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
          })) {
        fail("bad substitution-site rank '" + digits + "'");
      }
      return make_site(std::stoi(digits));
    }
    DiscourseUnit unit{token, token, next_seq_++};
    return make_leaf(std::move(unit));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t next_seq_ = 0;
};

struct JsonReadState {
  bool all_ids = true;
  std::uint32_t max_id = 0;
  int max_rank = 0;
};

NodePtr node_from_json(const nlohmann::json& j, JsonReadState& state) {
  if (!j.is_object() || !j.contains("kind")) {
    throw Error(ErrorCode::kFormat, "tree json: node object needs \"kind\"");
  }
  const std::string kind = j.at("kind").get<std::string>();
  FeatureMap features;
  if (j.contains("features")) {
    features = j.at("features").get<FeatureMap>();
  }
  NodePtr node;
  if (kind == "relation") {
    const auto& children = j.value("children", nlohmann::json::array());
    NodePtr left = children.size() > 0 ? node_from_json(children[0], state)
                                       : nullptr;
    NodePtr right = children.size() > 1 ? node_from_json(children[1], state)
                                        : nullptr;
    if (children.size() > 2) {
      throw Error(ErrorCode::kFormat, "tree json: more than two children");
    }
    node = make_relation(RelationLabel(j.value("label", std::string())),
                         std::move(left), std::move(right),
                         std::move(features));
  } else if (kind == "leaf") {
    const auto& u = j.at("unit");
    DiscourseUnit unit{u.at("id").get<std::string>(),
                       u.value("text", std::string()),
                       u.value("seq", std::size_t{0})};
    node = make_leaf(std::move(unit), std::move(features));
  } else if (kind == "empty") {
    const std::string role = j.value("role", std::string());
    if (role == "foot") {
      node = make_foot(std::move(features));
    } else if (role == "site") {
      const int rank = j.value("rank", 1);
      state.max_rank = std::max(state.max_rank, rank);
      node = make_site(rank, std::move(features));
    } else {
      throw Error(ErrorCode::kFormat, "tree json: unknown role '" + role + "'");
    }
  } else {
    throw Error(ErrorCode::kFormat, "tree json: unknown kind '" + kind + "'");
  }
  if (j.contains("id")) {
    auto copy = std::make_shared<Node>(*node);
    copy->id = NodeId{j.at("id").get<std::uint32_t>()};
    state.max_id = std::max(state.max_id, copy->id.value);
    node = copy;
  } else {
    state.all_ids = false;
  }
  return node;
}

}  // namespace

std::string describe(const Node& node) {
  switch (node.kind) {
    case NodeKind::kRelation:
      return node.label.name();
    case NodeKind::kLeaf:
      return node.unit ? node.unit->id : "?";
    case NodeKind::kEmpty:
      if (node.role == EmptyRole::kFoot) return "*";
      return std::string(kSiteMark) + std::to_string(node.rank);
  }
  return "?";
}

std::string to_bracket(const NodePtr& node) {
  std::string out;
  write_bracket(node.get(), out);
  return out;
}

std::string to_bracket(const DiscourseTree& tree) {
  return tree.empty() ? std::string() : to_bracket(tree.root());
}

DiscourseTree parse_bracket(std::string_view text) {
  return DiscourseTree::adopt(BracketReader(text).read_tree());
}

nlohmann::json node_to_json(const Node& node) {
  nlohmann::json j;
  j["id"] = node.id.value;
  switch (node.kind) {
    case NodeKind::kRelation:
      j["kind"] = "relation";
      j["label"] = node.label.name();
      break;
    case NodeKind::kLeaf:
      j["kind"] = "leaf";
      if (node.unit) {
        j["unit"] = {{"id", node.unit->id},
                     {"text", node.unit->text},
                     {"seq", node.unit->seq}};
      }
      break;
    case NodeKind::kEmpty:
      j["kind"] = "empty";
      j["role"] = node.is_foot() ? "foot" : "site";
      if (node.is_site()) j["rank"] = node.rank;
      break;
  }
  j["features"] = node.features;
  if (node.kind == NodeKind::kRelation) {
    auto children = nlohmann::json::array();
    if (node.left) children.push_back(node_to_json(*node.left));
    if (node.right) children.push_back(node_to_json(*node.right));
    j["children"] = std::move(children);
  }
  return j;
}

nlohmann::json to_json(const DiscourseTree& tree) {
  nlohmann::json j;
  j["next_id"] = tree.next_id().value;
  j["next_rank"] = tree.next_rank();
  j["root"] = tree.empty() ? nlohmann::json(nullptr)
                           : node_to_json(*tree.root());
  return j;
}

DiscourseTree tree_from_json(const nlohmann::json& value) {
  try {
    const bool wrapped = value.is_object() && value.contains("root");
    const nlohmann::json& root_json = wrapped ? value.at("root") : value;
    if (root_json.is_null()) return DiscourseTree();
    JsonReadState state;
    NodePtr root = node_from_json(root_json, state);
    if (!wrapped || !state.all_ids) return DiscourseTree::adopt(root);
    const std::uint32_t next_id =
        value.value("next_id", state.max_id + 1);
    const int next_rank = value.value("next_rank", state.max_rank + 1);
    return DiscourseTree::from_parts(root, NodeId{next_id}, next_rank);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kFormat, std::string("tree json: ") + e.what());
  }
}

DiscourseTree parse_tree(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kFormat, std::string("tree json: ") + e.what());
    }
    return tree_from_json(j);
  }
  return parse_bracket(text);
}

}  // namespace dltag
