#include <gtest/gtest.h>

#include <regex>

#include "codemark/embedder.hpp"
#include "codemark/errors.hpp"
#include "codemark/extractor.hpp"
#include "codemark/rules.hpp"
#include "test_support.hpp"

using namespace codemark;

namespace {

const CodebaseIndex& corpus_index() {
  static const CodebaseIndex index(codemark::testing::bundled_corpus());
  return index;
}

std::vector<std::string> all_patterns(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t v = 0; v < (1u << n); ++v) {
    std::string s;
    for (std::size_t k = 0; k < n; ++k) s += (v >> (n - 1 - k)) & 1 ? '1' : '0';
    out.push_back(s);
  }
  return out;
}

const std::set<std::string> kWhitespaceFragile{"organization.insert_blank_line", "organization.format_spacing",
                                               "organization.adjust_op_space"};

}  // namespace

TEST(Retrieve, VerbatimSnippetScoresOne) {
  const auto& cb = codemark::testing::bundled_corpus();
  for (const auto& s : cb.snippets()) {
    auto r = retrieve(s, corpus_index(), {});
    EXPECT_EQ(r.match.id, s.id);
    EXPECT_DOUBLE_EQ(r.score, 1.0);
    EXPECT_GE(r.score, r.runner_up_score);
    EXPECT_FALSE(r.low_confidence);
  }
}

TEST(Retrieve, RenamedSnippetFindsOriginal) {
  auto calc = CodeSnippet::make("calc.c", Language::c,
                                "int calc_sum(int n) {\n  int sum = 0;\n  for (int i = 0; i < n; i++) sum += i;\n  return sum;\n}\n");
  auto sort = CodeSnippet::make("sort.c", Language::c,
                                "void sort(int* a, int len) {\n  for (int x = 0; x < len; x++)\n    for (int y = x + 1; y < len; y++)\n"
                                "      if (a[y] < a[x]) { int t = a[x]; a[x] = a[y]; a[y] = t; }\n}\n");
  CodebaseIndex index(CandidateCodebase({calc, sort}));
  auto c1 = calc.with_text(
      "int calcSum(int n) {\n  int sum = 0;\n  for (int i = 0; i < n; i++) sum += i;\n  return sum;\n}\n");
  auto r = retrieve(c1, index, {});
  EXPECT_EQ(r.match.id, "calc.c");
  EXPECT_GT(r.score, r.runner_up_score);
  double expected = (r.breakdown.name + r.breakdown.vars + r.breakdown.structure + r.breakdown.sem) / 4.0;
  EXPECT_NEAR(r.score, expected, 1e-12);
  EXPECT_DOUBLE_EQ(r.breakdown.name, 0.75);
}

TEST(Retrieve, TiesGoToSmallestId) {
  auto a = CodeSnippet::make("b_first.c", Language::c, "int f(int x) { return x + 1; }");
  auto b = CodeSnippet::make("a_second.c", Language::c, "int f(int x) { return x + 2; }");
  CodebaseIndex index(CandidateCodebase({a, b}));
  auto probe = CodeSnippet::make("p.c", Language::c, "int f(int x) { return x + 3; }");
  auto r = retrieve(probe, index, {});
  EXPECT_EQ(r.match.id, "a_second.c");
  EXPECT_DOUBLE_EQ(r.score, r.runner_up_score);
}

TEST(Retrieve, EmptyCodebaseIsAnError) { EXPECT_THROW(CodebaseIndex(CandidateCodebase{}), InvalidArgument); }

TEST(Retrieve, MissingOriginalIsLowConfidence) {
  auto probe = CodeSnippet::make("p.txt", Language::unknown, "zzz qqq www");
  auto r = retrieve(probe, corpus_index(), {});
  EXPECT_TRUE(r.low_confidence);
  EXPECT_LT(r.score, kLowConfidence);
}

TEST(ReconstructPlan, SameAsEmbedderPlan) {
  auto mock = Backend::mock();
  for (const auto& s : codemark::testing::bundled_corpus().snippets()) {
    auto a = reconstruct_plan(mock, s, 4);
    auto b = plan(mock, s, 4);
    ASSERT_EQ(a.per_bit.size(), b.per_bit.size());
    for (std::size_t k = 0; k < a.per_bit.size(); ++k) {
      EXPECT_EQ(a.per_bit[k].category, b.per_bit[k].category);
      EXPECT_EQ(a.per_bit[k].ranked, b.per_bit[k].ranked);
    }
  }
  auto flat = CodeSnippet::make("f.c", Language::c, "int f(int x) { return x; }");
  EXPECT_TRUE(reconstruct_plan(mock, flat, 4).per_bit[1].ranked.empty());
}

TEST(Decode, IdentityGivesZeros) {
  auto mock = Backend::mock();
  for (const auto& s : codemark::testing::bundled_corpus().snippets()) {
    auto r = extract(mock, s, corpus_index(), {}, 4);
    EXPECT_EQ(r.bits.str(), "0000") << s.id;
    EXPECT_EQ(r.evidence.size(), 4u);
  }
}

TEST(Decode, SingleRenameGivesFirstBit) {
  auto mock = Backend::mock();
  auto c_hat = CodeSnippet::make("sum.c", Language::c,
                                 "int sumUp(int itemCount) {\n  int runningTotal = 0;\n  for (int i = 0; i < itemCount; i++) {\n"
                                 "    runningTotal += i;\n  }\n  return runningTotal;\n}\n");
  auto p = reconstruct_plan(mock, c_hat, 4);
  ASSERT_FALSE(p.per_bit[0].ranked.empty());
  const auto* head = p.per_bit[0].ranked.front();
  EXPECT_EQ(head->category, Category::naming);
  auto c1 = c_hat.with_text(apply_text(*head, c_hat.text, Language::c));
  auto r = decode(mock, c1, c_hat, p);
  EXPECT_EQ(r.bits.str(), "1000");
  EXPECT_EQ(r.evidence[0].rule_id, head->rule_id);
  EXPECT_EQ(r.evidence[0].decided_by, "sem");
  EXPECT_GT(r.evidence[0].sim_after, r.evidence[0].sim_before);
}

TEST(Decode, AllSixteenPatternsOnLoopFixture) {
  auto mock = Backend::mock();
  const auto& s = codemark::testing::bundled_corpus().at("c/sum_positive.c");
  ASSERT_FALSE(plan(mock, s, 4).per_bit[1].ranked.empty());
  for (const auto& bits : all_patterns(4)) {
    auto out = embed(mock, s, WatermarkBits::parse(bits));
    ASSERT_TRUE(out.success) << bits;
    auto r = extract(mock, out.require(), corpus_index(), {}, 4);
    EXPECT_EQ(r.retrieval.match.id, s.id);
    EXPECT_EQ(r.bits.str(), bits);
  }
}

TEST(Decode, RoundTripEveryFixtureAndPattern) {
  auto mock = Backend::mock();
  for (const auto& s : codemark::testing::bundled_corpus().snippets()) {
    for (const auto& bits : all_patterns(4)) {
      auto out = embed(mock, s, WatermarkBits::parse(bits));
      ASSERT_TRUE(out.success) << s.id << " " << bits;
      auto r = extract(mock, out.require(), corpus_index(), {}, 4);
      EXPECT_EQ(r.retrieval.match.id, s.id) << bits;
      EXPECT_EQ(r.bits.str(), bits) << s.id;
    }
  }
}

TEST(Decode, LongerMessages) {
  auto mock = Backend::mock();
  const auto& s = codemark::testing::bundled_corpus().at("cpp/running_max.cpp");
  for (auto bits : {"10110", "011011", "1111111", "10000001"}) {
    auto out = embed(mock, s, WatermarkBits::parse(bits));
    if (!out.success) continue;
    auto r = extract(mock, out.require(), corpus_index(), {}, out.record.bits.size());
    EXPECT_EQ(r.bits.str(), bits);
  }
}

TEST(Decode, RequestedLengthIsHonoured) {
  auto mock = Backend::mock();
  const auto& s = codemark::testing::bundled_corpus().at("c/sum_positive.c");
  auto out = embed(mock, s, WatermarkBits::parse("1010"));
  auto r = extract(mock, out.require(), corpus_index(), {}, 6);
  EXPECT_EQ(r.bits.size(), 6u);
  EXPECT_EQ(r.evidence.size(), 6u);
  EXPECT_EQ(r.bits.str().substr(0, 4), "1010");
}

TEST(Decode, IsDeterministic) {
  auto mock = Backend::mock();
  const auto& s = codemark::testing::bundled_corpus().at("java/SumEven.java");
  auto out = embed(mock, s, WatermarkBits::parse("1101"));
  auto a = extract(mock, out.require(), corpus_index(), {}, 4);
  auto b = extract(mock, out.require(), corpus_index(), {}, 4);
  EXPECT_EQ(extraction_to_json(a), extraction_to_json(b));
}

TEST(Decode, MarginSuppressesSmallImprovements) {
  auto mock = Backend::mock();
  const auto& s = codemark::testing::bundled_corpus().at("c/sum_positive.c");
  auto out = embed(mock, s, WatermarkBits::parse("1111"));
  auto r = extract(mock, out.require(), corpus_index(), {}, 4, DecodingPolicy{1.0});
  for (const auto& e : r.evidence) {
    if (e.decided_by == "sem") EXPECT_FALSE(e.decision);
  }
  EXPECT_THROW(DecodingPolicy{1.5}.validate(), InvalidArgument);
  EXPECT_THROW(DecodingPolicy{-0.1}.validate(), InvalidArgument);
}

TEST(Decode, WhitespaceReformattingOnlyAffectsFragileBits) {
  auto mock = Backend::mock();
  const std::regex indent("\n( +)");
  for (const auto& s : codemark::testing::bundled_corpus().snippets()) {
    for (auto bits : {"1111", "1011", "0110"}) {
      auto out = embed(mock, s, WatermarkBits::parse(bits));
      ASSERT_TRUE(out.success);
      auto reformatted = std::regex_replace(out.require().text, indent, "\n$1$1");
      auto r = extract(mock, out.require().with_text(reformatted), corpus_index(), {}, 4);
      EXPECT_EQ(r.retrieval.match.id, s.id);
      for (std::size_t k = 0; k < 4; ++k) {
        const auto& rule = out.record.per_bit_rules[k].rule_id;
        if (kWhitespaceFragile.count(rule)) continue;
        EXPECT_EQ(r.bits[k], out.record.bits[k]) << s.id << " " << bits << " bit " << k + 1 << " " << rule;
      }
    }
  }
}

TEST(ExtractionJson, CarriesEvidence) {
  auto mock = Backend::mock();
  const auto& s = codemark::testing::bundled_corpus().at("c/sum_positive.c");
  auto out = embed(mock, s, WatermarkBits::parse("1001"));
  auto r = extract(mock, out.require(), corpus_index(), {}, 4);
  auto json = extraction_to_json(r, s.id);
  auto lines = extraction_lines_from_jsonl(json + "\n");
  ASSERT_EQ(lines.size(), 1u);
  EXPECT_EQ(lines[0].snippet_id, s.id);
  EXPECT_EQ(lines[0].bits.str(), "1001");
  EXPECT_EQ(lines[0].match_id, s.id);
  EXPECT_NE(json.find("\"evidence\""), std::string::npos);
  EXPECT_NE(json.find("\"decided_by\""), std::string::npos);
}
