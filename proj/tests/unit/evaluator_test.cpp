#include <gtest/gtest.h>

#include <random>

#include <nlohmann/json.hpp>

#include "codemark/errors.hpp"
#include "codemark/evaluator.hpp"
#include "codemark/rules.hpp"
#include "test_support.hpp"

using namespace codemark;
using codemark::testing::TempDir;
using codemark::testing::write_text;

namespace {

BitPair pair(const char* w, const char* w_hat) { return {WatermarkBits::parse(w), WatermarkBits::parse(w_hat)}; }

/// Ten pairs with hand-counted totals: 31 of 40 bits match, 4 messages exact.
std::vector<BitPair> ten_pairs() {
  return {pair("1010", "1010"), pair("1010", "1011"), pair("1111", "0000"), pair("1100", "1101"),
          pair("0000", "0000"), pair("0110", "0110"), pair("1001", "1000"), pair("0011", "1011"),
          pair("1110", "1110"), pair("0101", "0111")};
}

SnippetArtifact artifact(const std::string& id, const char* w, std::optional<const char*> w_hat) {
  SnippetArtifact a;
  a.snippet_id = id;
  a.embedded = WatermarkBits::parse(w);
  if (w_hat) a.extracted = WatermarkBits::parse(*w_hat);
  a.matched_id = id;
  return a;
}

TestSuite python_suite(const TempDir& dir) {
  TestSuite suite;
  suite.commands[Language::python] = "python3 {file}";
  suite.harness_dir = dir.path();
  suite.timeout = std::chrono::seconds(20);
  return suite;
}

}  // namespace

TEST(Metrics, WorkedExamples) {
  std::vector<BitPair> one{pair("1010", "1010")};
  EXPECT_DOUBLE_EQ(bit_acc(one), 1.0);
  one = {pair("1010", "1011")};
  EXPECT_DOUBLE_EQ(bit_acc(one), 0.75);
  one = {pair("1111", "0000")};
  EXPECT_DOUBLE_EQ(bit_acc(one), 0.0);
  std::vector<BitPair> two{pair("1010", "1010"), pair("1100", "1101")};
  EXPECT_DOUBLE_EQ(msg_acc(two), 0.5);
}

TEST(Metrics, TenPairTable) {
  auto pairs = ten_pairs();
  EXPECT_DOUBLE_EQ(bit_acc(pairs), 31.0 / 40.0);
  EXPECT_DOUBLE_EQ(msg_acc(pairs), 0.4);
}

TEST(Metrics, Errors) {
  EXPECT_THROW(bit_acc({}), InvalidArgument);
  EXPECT_THROW(msg_acc({}), InvalidArgument);
  std::vector<BitPair> bad{pair("1010", "1010"), pair("101", "1010")};
  try {
    bit_acc(bad);
    FAIL() << "expected InvalidArgument";
  } catch (const InvalidArgument& e) {
    EXPECT_NE(std::string(e.what()).find("pair 1"), std::string::npos) << e.what();
  }
}

TEST(Metrics, ExactMessagesImplyExactBits) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<BitPair> pairs;
    for (int i = 0; i < 5; ++i) {
      std::string a, b;
      for (int k = 0; k < 4; ++k) {
        a += rng() % 2 ? '1' : '0';
        b += rng() % 5 == 0 ? (a.back() == '1' ? '0' : '1') : a.back();
      }
      pairs.push_back({WatermarkBits::parse(a), WatermarkBits::parse(b)});
    }
    double m = msg_acc(pairs), b = bit_acc(pairs);
    EXPECT_GE(b, m - 1e-12);
    if (m == 1.0) EXPECT_EQ(b, 1.0);
  }
}

TEST(SyntaxCheck, BuiltIn) {
  auto s = CodeSnippet::make("s.c", Language::c, "int f(int a) { if (a) { return [1][0]; } return 0; }");
  EXPECT_TRUE(syntax_check(s).ok);
  std::string broken = s.text;
  broken.erase(broken.rfind('}'), 1);
  EXPECT_FALSE(syntax_check(s.with_text(broken)).ok);
  EXPECT_FALSE(syntax_check(s.with_text("int f() { return (1]; }")).ok);
  EXPECT_FALSE(syntax_check(s.with_text("int f() { return \"open; }")).ok);
  auto py = CodeSnippet::make("p.py", Language::python, "def f(a):\n    return [a, (a)]\n");
  EXPECT_TRUE(syntax_check(py).ok);
}

TEST(SyntaxCheck, ExternalValidatorOverridesOrFallsBack) {
  auto s = CodeSnippet::make("s.c", Language::c, "int f() { return 1; }");
  EXPECT_FALSE(syntax_check(s, {{Language::c, "false {file}"}}).ok);
  EXPECT_TRUE(syntax_check(s, {{Language::c, "true {file}"}}).ok);
  auto fallback = syntax_check(s, {{Language::c, "no-such-validator-xyz {file}"}});
  EXPECT_TRUE(fallback.ok);
  EXPECT_NE(fallback.notes.find("built-in"), std::string::npos) << fallback.notes;
}

TEST(RunTests, DoublingRewritePasses) {
  if (!program_available("python3")) GTEST_SKIP() << "python3 missing";
  TempDir dir;
  write_text(dir / "d.py", "import sys\n\n@@FUNCTION@@\n\nif @FN@(21) != 42 or @FN@(-3) != -6:\n    sys.exit(1)\n");
  auto suite = python_suite(dir);
  auto s = CodeSnippet::make("d.py", Language::python, "def double_it(x):\n    return 2 * x\n");
  EXPECT_EQ(run_tests(s, suite).outcome, TestOutcome::pass);
  EXPECT_EQ(run_tests(s.with_text("def double_it(x):\n    return x + x\n"), suite).outcome, TestOutcome::pass);
  EXPECT_EQ(run_tests(s.with_text("def double_it(x):\n    return x + 2\n"), suite).outcome, TestOutcome::fail);
  auto renamed = apply(catalog().at("naming.to_pascal"), s);
  EXPECT_EQ(run_tests(renamed, suite).outcome, TestOutcome::pass) << renamed.text;
}

TEST(RunTests, BundledFixturesPassAsShipped) {
  auto suite = TestSuite::load(codemark::testing::corpus_dir() / "tests.json");
  for (const auto& s : codemark::testing::bundled_corpus().snippets()) {
    if (s.language == Language::cpp) continue;
    auto r = run_tests(s, suite);
    EXPECT_NE(r.outcome, TestOutcome::fail) << s.id << ": " << r.reason;
  }
}

TEST(RunTests, CamelToSnakeWithCallSites) {
  auto suite = TestSuite::load(codemark::testing::corpus_dir() / "tests.json");
  const auto& rule = catalog().at("naming.camel_to_snake");
  std::size_t ran = 0;
  for (const auto& s : codemark::testing::bundled_corpus().snippets()) {
    if (!is_applicable(rule, s)) continue;
    auto r = run_tests(apply(rule, s), suite);
    if (r.outcome == TestOutcome::skipped) continue;
    EXPECT_EQ(r.outcome, TestOutcome::pass) << s.id << ": " << r.reason;
    ++ran;
  }
  if (ran == 0) GTEST_SKIP() << "no runnable fixture with camelCase names";
}

TEST(RunTests, TimeoutFails) {
  if (!program_available("python3")) GTEST_SKIP() << "python3 missing";
  TempDir dir;
  write_text(dir / "t.py", "@@FUNCTION@@\n@FN@()\n");
  auto suite = python_suite(dir);
  suite.timeout = std::chrono::seconds(1);
  auto s = CodeSnippet::make("t.py", Language::python, "def spin():\n    while True:\n        pass\n");
  auto start = std::chrono::steady_clock::now();
  auto r = run_tests(s, suite);
  EXPECT_EQ(r.outcome, TestOutcome::fail);
  EXPECT_NE(r.reason.find("timed out"), std::string::npos) << r.reason;
  EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds(10));
}

TEST(RunTests, SkippedCases) {
  TempDir dir;
  write_text(dir / "h.py", "@@FUNCTION@@\n");
  auto suite = python_suite(dir);
  auto s = CodeSnippet::make("none.py", Language::python, "def f():\n    return 1\n");
  EXPECT_EQ(run_tests(s, suite).outcome, TestOutcome::skipped);
  auto js = CodeSnippet::make("h.js", Language::javascript, "function f() { return 1; }\n");
  EXPECT_EQ(run_tests(js, suite).outcome, TestOutcome::skipped);
  suite.commands[Language::python] = "no-such-runtime-xyz {file}";
  auto r = run_tests(s.with_text(s.text), suite);
  EXPECT_EQ(r.outcome, TestOutcome::skipped);
  auto with_harness = CodeSnippet::make("h.py", Language::python, "def f():\n    return 1\n");
  EXPECT_EQ(run_tests(with_harness, suite).reason, "runtime not installed");
}

TEST(RunTests, HarnessWithoutMarkerIsFormatError) {
  if (!program_available("python3")) GTEST_SKIP() << "python3 missing";
  TempDir dir;
  write_text(dir / "m.py", "print(1)\n");
  auto suite = python_suite(dir);
  EXPECT_THROW(run_tests(CodeSnippet::make("m.py", Language::python, "def f():\n    return 1\n"), suite), FormatError);
}

TEST(TestSuiteFile, LoadsRelativeHarnessDir) {
  TempDir dir;
  write_text(dir / "suite.json", R"({"commands": {"python": "python3 {file}"}, "harness_dir": "h", "timeout_seconds": 5})");
  auto suite = TestSuite::load(dir / "suite.json");
  EXPECT_EQ(suite.harness_dir, dir / "h");
  EXPECT_EQ(suite.timeout, std::chrono::seconds(5));
  EXPECT_EQ(suite.commands.at(Language::python), "python3 {file}");
  write_text(dir / "bad.json", R"({"commands": {"python": 3}})");
  EXPECT_THROW(TestSuite::load(dir / "bad.json"), FormatError);
}

TEST(Report, AggregatesArtifacts) {
  RunArtifacts a;
  a.snippets = {artifact("a", "1010", "1010"), artifact("b", "1100", "1101"), artifact("c", "0011", std::nullopt)};
  a.snippets[1].syntax_ok = false;
  a.snippets[0].test = TestOutcome::pass;
  a.snippets[1].test = TestOutcome::fail;
  a.snippets[2].test = TestOutcome::skipped;
  a.snippets[0].similarity = 0.9;
  a.snippets[1].similarity = 0.8;
  a.snippets[2].similarity = 0.7;
  a.snippets[2].matched_id = "elsewhere";
  a.embed_failures = 1;
  auto r = build_report(a);
  EXPECT_DOUBLE_EQ(r.bit_acc, 7.0 / 12.0);
  EXPECT_DOUBLE_EQ(r.msg_acc, 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(r.bpf, 4.0);
  EXPECT_DOUBLE_EQ(r.syntax_rate, 2.0 / 3.0);
  ASSERT_TRUE(r.pass_rate.has_value());
  EXPECT_DOUBLE_EQ(*r.pass_rate, 0.5);
  EXPECT_EQ(r.pass_skipped, 1u);
  EXPECT_NEAR(r.sim_degradation, 0.8, 1e-12);
  EXPECT_EQ(r.n_snippets, 4u);
  EXPECT_EQ(r.n_failures, 2u);
  EXPECT_DOUBLE_EQ(r.retrieval_acc, 2.0 / 3.0);

  auto j = nlohmann::json::parse(report_to_json(r));
  for (auto key : {"bit_acc", "msg_acc", "bpf", "syntax_rate", "pass_rate", "pass_skipped", "sim_degradation",
                   "n_snippets", "n_failures"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  auto table = report_to_table(r);
  EXPECT_NE(table.find("BitAcc"), std::string::npos);
  EXPECT_EQ(report_to_json(build_report(a)), report_to_json(r));
}

TEST(Report, PassRateAbsentWithoutTests) {
  RunArtifacts a;
  a.snippets = {artifact("a", "1010", "1010")};
  auto r = build_report(a);
  EXPECT_FALSE(r.pass_rate.has_value());
  EXPECT_TRUE(nlohmann::json::parse(report_to_json(r))["pass_rate"].is_null());
}

TEST(Report, Errors) {
  EXPECT_THROW(build_report(RunArtifacts{}), InvalidArgument);
  RunArtifacts dup;
  dup.snippets = {artifact("a", "1010", "1010"), artifact("a", "1010", "1010")};
  EXPECT_THROW(build_report(dup), InvalidArgument);
  RunArtifacts mismatch;
  mismatch.snippets = {artifact("a", "1010", "10")};
  EXPECT_THROW(build_report(mismatch), InvalidArgument);
  RunArtifacts noid;
  noid.snippets = {artifact("", "1010", "1010")};
  EXPECT_THROW(build_report(noid), InvalidArgument);
}
