#include <gtest/gtest.h>

#include "dltag/fixtures.h"
#include "dltag/oracle_sweep.h"
#include "dltag/parser.h"
#include "dltag/serialize.h"

using namespace dltag;

TEST(ParallelSweep, MatchesSerial) {
  for (int threads : {1, 2, 4}) {
    EXPECT_EQ(sweep_parallel({6, 2}, threads), sweep_serial({6, 2}))
        << threads;
  }
}

namespace {

std::vector<std::string> trees(const std::vector<ParserState>& states) {
  std::vector<std::string> out;
  for (const auto& s : states) out.push_back(to_bracket(s.tree));
  return out;
}

}  // namespace

TEST(ParallelExpand, MatchesSerialOrder) {
  const auto units = example_units(bundled_example(6), Lexicon::bundled());
  std::vector<ParserState> serial(1), parallel(1);
  for (const auto& u : units) {
    serial = expand_serial(serial, u);
    parallel = expand_parallel(parallel, u, 4);
    ASSERT_EQ(trees(parallel), trees(serial));
  }
}

TEST(ParallelParse, MatchesSerial) {
  ParseOptions serial;
  serial.mode = ParseMode::kEnumerate;
  ParseOptions parallel = serial;
  parallel.threads = 3;
  for (int n = 1; n <= 6; ++n) {
    const auto units = example_units(bundled_example(n), Lexicon::bundled());
    const auto a = parse(units, serial), b = parse(units, parallel);
    ASSERT_EQ(a.derivations.size(), b.derivations.size());
    for (std::size_t i = 0; i < a.derivations.size(); ++i) {
      EXPECT_TRUE(identical(a.derivations[i].final, b.derivations[i].final));
    }
  }
}

TEST(ParallelExpand, PropagatesErrors) {
  const auto units = example_units(bundled_example(2), Lexicon::bundled());
  std::vector<ParserState> states(2);
  EXPECT_THROW(expand_parallel(states, units[1], 2), std::exception);
}
