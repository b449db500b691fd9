#include <gtest/gtest.h>

#include <algorithm>

#include "dltag/error.h"
#include "dltag/serialize.h"
#include "dltag/tree.h"

using namespace dltag;

namespace {

DiscourseUnit unit(const std::string& id, std::size_t seq) {
  return {id, id, seq};
}

bool has(const std::vector<Violation>& v, ViolationKind kind) {
  return std::any_of(v.begin(), v.end(),
                     [&](const Violation& x) { return x.kind == kind; });
}

}  // namespace

TEST(Tree, AdoptNumbersPreOrder) {
  const auto t = DiscourseTree::adopt(make_relation(
      RelationLabel("Contrast"), make_leaf(unit("a", 0)), make_site(1)));
  EXPECT_EQ(t.size(), 3u);
  EXPECT_EQ(t.root()->id.value, 0u);
  EXPECT_EQ(t.root()->left->id.value, 1u);
  EXPECT_EQ(t.root()->right->id.value, 2u);
  EXPECT_EQ(t.next_id().value, 3u);
  EXPECT_EQ(t.next_rank(), 2);
}

TEST(Tree, EmptyTree) {
  DiscourseTree t;
  EXPECT_TRUE(t.empty());
  EXPECT_EQ(t.size(), 0u);
  EXPECT_TRUE(terminal_frontier(t).empty());
  EXPECT_TRUE(validate(t).empty());
}

TEST(Tree, ReplaceAtSharesUntouchedSubtrees) {
  const auto t = parse_bracket("R(S(a, b), T(c, ↓1))");
  const auto path = t.path_to(t.root()->right->right->id);
  ASSERT_TRUE(path);
  EXPECT_EQ(path->depth(), 2u);
  const NodePtr root = replace_at(*path, make_leaf(unit("d", 3)));
  EXPECT_EQ(root->left, t.root()->left);
  EXPECT_NE(root->right, t.root()->right);
  EXPECT_EQ(to_bracket(t), "R(S(a, b), T(c, ↓1))");
  EXPECT_EQ(to_bracket(root), "R(S(a, b), T(c, d))");
}

TEST(Tree, TerminalsWithDepth) {
  const auto t = parse_bracket("R(a, S(b, ↓1))");
  const auto info = terminals_with_depth(t);
  ASSERT_EQ(info.size(), 3u);
  EXPECT_EQ(info[0].depth, 1u);
  EXPECT_FALSE(info[0].is_right_child);
  EXPECT_EQ(info[2].depth, 2u);
  EXPECT_TRUE(info[2].is_right_child);
  EXPECT_TRUE(info[2].node->is_site());
}

TEST(Tree, SameStructureIgnoresIdsAndRanks) {
  const auto a = parse_bracket("R(a, S(b, ↓1))");
  const auto b = parse_bracket("R(a, S(b, ↓7))");
  EXPECT_TRUE(same_structure(a, b));
  EXPECT_FALSE(identical(a, b));
  EXPECT_FALSE(same_structure(a, parse_bracket("R(a, T(b, ↓1))")));
  EXPECT_FALSE(same_structure(a, parse_bracket("R(S(a, b), ↓1)")));
}

TEST(Validate, AcceptsNestedSiteShapes) {
  for (const char* s : {"a", "Contrast(a, ↓1)", "Contrast(a, A/C(b, ↓2))",
                        "Contrast(Evidence(a, A/C(b, ↓2)), ↓1)",
                        "Contrast(Evidence(a, A/C(b, c)), d)"}) {
    EXPECT_TRUE(validate(parse_bracket(s)).empty()) << s;
  }
}

TEST(Validate, SiteMustBeRightChild) {
  EXPECT_TRUE(has(validate(parse_bracket("R(↓1, a)")),
                  ViolationKind::kSiteNotRightmost));
}

TEST(Validate, NothingAfterASite) {
  EXPECT_TRUE(has(validate(parse_bracket("R(S(a, ↓1), b)")),
                  ViolationKind::kMaterialRightOfSite));
}

TEST(Validate, DepthTie) {
  EXPECT_TRUE(has(validate(parse_bracket("R(S(a, ↓1), T(b, ↓2))")),
                  ViolationKind::kSiteDepthTie) ||
              has(validate(parse_bracket("R(S(a, ↓1), T(b, ↓2))")),
                  ViolationKind::kMaterialRightOfSite));
}

TEST(Validate, DuplicateSeq) {
  const auto t = DiscourseTree::adopt(make_relation(
      RelationLabel("R"), make_leaf(unit("a", 0)), make_leaf(unit("b", 0))));
  EXPECT_TRUE(has(validate(t), ViolationKind::kDuplicateSeq));
}

TEST(Validate, MessagesNameTheNode) {
  const auto v = validate(parse_bracket("R(↓1, a)"));
  ASSERT_FALSE(v.empty());
  EXPECT_NE(v.front().message.find("(node #"), std::string::npos);
}

TEST(Templates, ElementaryAndAuxiliary) {
  EXPECT_NO_THROW(make_elementary(make_relation(
      RelationLabel("A/C"), make_leaf(unit("b", 0)), make_site(1))));
  EXPECT_NO_THROW(make_auxiliary(make_relation(
      RelationLabel("Contrast"), make_foot(), make_leaf(unit("b", 0)))));
  EXPECT_NO_THROW(make_auxiliary(make_relation(
      RelationLabel("Contrast"), make_foot(),
      make_relation(RelationLabel("A/C"), make_leaf(unit("b", 0)),
                    make_site(1)))));
}

TEST(Templates, Rejections) {
  auto code = [](auto f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kIo;
  };
  // Foot in an elementary tree.
  EXPECT_EQ(code([] {
              make_elementary(make_relation(RelationLabel("R"), make_foot(),
                                            make_leaf(unit("b", 0))));
            }),
            ErrorCode::kInvalidTemplate);
  // Auxiliary without foot.
  EXPECT_EQ(code([] { make_auxiliary(make_leaf(unit("b", 0))); }),
            ErrorCode::kInvalidTemplate);
  // Foot not leftmost.
  EXPECT_EQ(code([] {
              make_auxiliary(make_relation(RelationLabel("R"),
                                           make_leaf(unit("b", 0)),
                                           make_foot()));
            }),
            ErrorCode::kInvalidTemplate);
  // Foot as left sister of a site.
  EXPECT_EQ(code([] {
              make_auxiliary(make_relation(
                  RelationLabel("R"), make_leaf(unit("b", 0)),
                  make_relation(RelationLabel("S"), make_foot(),
                                make_site(1))));
            }),
            ErrorCode::kInvalidTemplate);
}

TEST(Templates, BetaAuxiliaryOnlyRejectedOnRequest) {
  const auto t = DiscourseTree::adopt(make_relation(
      RelationLabel("R"),
      make_relation(RelationLabel("S"), make_foot(), make_leaf(unit("u", 0))),
      make_site(1)));
  const TreeTemplate templ{TemplateCategory::kAuxiliary, t};
  EXPECT_FALSE(has(validate(templ), ViolationKind::kBetaAuxiliary));
  ValidationOptions strict;
  strict.reject_beta_auxiliary = true;
  EXPECT_TRUE(has(validate(templ, strict), ViolationKind::kBetaAuxiliary));
}
