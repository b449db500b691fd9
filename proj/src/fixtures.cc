#include "dltag/fixtures.h"

#include "dltag/error.h"

namespace dltag {

const std::vector<Example>& bundled_examples() {
  static const std::vector<Example> examples = {
      {1,
       "expectation satisfied by the next clause",
       {{"a", "On the one hand, John is very generous."},
        {"b", "On the other, he is extremely difficult to find."}},
       ParseMode::kDeterministic,
       "Contrast(a, b)"},
      {2,
       "satisfier that raises its own expectation",
       {{"a", "On the one hand, John is very generous."},
        {"b", "On the other, suppose you needed some money."},
        {"c", "You'd see that he's very difficult to find."}},
       ParseMode::kDeterministic,
       "Contrast(a, A/C(b, c))"},
      {3,
       "expectation held open across an elaboration",
       {{"a", "On the one hand, John is very generous."},
        {"b", "For example, suppose you needed some money."},
        {"c", "You would just have to ask him for it."},
        {"d", "On the other hand, he is very difficult to find."}},
       ParseMode::kDeterministic,
       "Contrast(Evidence(a, A/C(b, c)), d)"},
      {4,
       "preposed subordinate clauses",
       {{"a", "Although John is very generous,"},
        {"b", "if you should need some money,"},
        {"c", "you'd see that he's difficult to find."}},
       ParseMode::kDeterministic,
       "Concession(a, A/C(b, c))"},
      {5,
       "backward marker without a pending expectation",
       {{"a", "John is very generous."},
        {"b", "On the other hand, suppose you needed money."},
        {"c", "You'd see that he's very difficult to find."}},
       ParseMode::kDeterministic,
       "Contrast(a, A/C(b, c))"},
      {6,
       "substitution or elaboration, decided two clauses later",
       {{"a", "Because John is such a generous man --"},
        {"b", "whenever he is asked for money,"},
        {"c", "he will give whatever he has, for example --"},
        {"d", "he deserves the \"Citizen of the Year\" award."}},
       ParseMode::kEnumerate,
       "Reason(Evidence(a, A/C(b, c)), d)"},
  };
  return examples;
}

const Example& bundled_example(int number) {
  for (const auto& e : bundled_examples()) {
    if (e.number == number) return e;
  }
  throw Error(ErrorCode::kFormat,
              "no bundled example " + std::to_string(number) + " (1..6)");
}

std::vector<UnitInput> example_units(const Example& example,
                                     const Lexicon& lexicon) {
  std::vector<UnitInput> out;
  for (std::size_t i = 0; i < example.units.size(); ++i) {
    out.push_back(make_unit(example.units[i].id, example.units[i].text, i,
                            lexicon));
  }
  return out;
}

}  // namespace dltag
