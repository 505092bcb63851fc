#include <gtest/gtest.h>

#include "codemark/evaluator.hpp"
#include "codemark/rules.hpp"
#include "test_support.hpp"

using namespace codemark;

namespace {

const TestSuite& suite() {
  static const TestSuite s = TestSuite::load(codemark::testing::corpus_dir() / "tests.json");
  return s;
}

class RuleSemantics : public ::testing::TestWithParam<Language> {};

}  // namespace

/// Each deterministic rule keeps every executable fixture passing its
/// harness. Languages without an installed runtime are skipped.
TEST_P(RuleSemantics, RewrittenFixturesPassTheirTests) {
  auto lang = GetParam();
  auto it = suite().commands.find(lang);
  ASSERT_NE(it, suite().commands.end());
  if (!program_available(it->second)) GTEST_SKIP() << "runtime for " << to_string(lang) << " not installed";

  std::size_t runs = 0;
  for (const auto& s : codemark::testing::bundled_corpus().snippets()) {
    if (s.language != lang) continue;
    auto base = run_tests(s, suite());
    ASSERT_EQ(base.outcome, TestOutcome::pass) << s.id << ": " << base.reason;
    for (const auto* r : catalog().deterministic_rules()) {
      if (!is_applicable(*r, s)) continue;
      auto result = run_tests(apply(*r, s), suite());
      EXPECT_EQ(result.outcome, TestOutcome::pass) << r->rule_id << " on " << s.id << ": " << result.reason;
      ++runs;
    }
  }
  EXPECT_GT(runs, 50u);
}

INSTANTIATE_TEST_SUITE_P(Languages, RuleSemantics,
                         ::testing::Values(Language::c, Language::cpp, Language::java, Language::javascript,
                                           Language::python),
                         [](const auto& info) { return std::string(to_string(info.param)); });
