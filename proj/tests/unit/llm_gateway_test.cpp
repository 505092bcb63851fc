#include <gtest/gtest.h>

#include "codemark/errors.hpp"
#include "codemark/evaluator.hpp"
#include "codemark/llm_gateway.hpp"
#include "codemark/rules.hpp"
#include "test_support.hpp"

using namespace codemark;

namespace {

std::vector<const TransformationRule*> fig_rules() {
  return {&catalog().at("naming.camel_to_snake"), &catalog().at("loops.for_to_while"),
          &catalog().at("math.group_ops"), &catalog().at("organization.insert_blank_line")};
}

CodeSnippet loop_snippet() {
  return CodeSnippet::make("loop.c", Language::c,
                           "int sumUp(int n) {\n  int total = 0;\n  for (int i = 0; i < n; i++) {\n    total += i;\n  }\n"
                           "  return total;\n}\n");
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST(EmbedPrompt, ContainsBitsAndAllRuleNames) {
  auto prompt = render_embed_prompt(loop_snippet(), WatermarkBits::parse("1001"), fig_rules());
  EXPECT_NE(prompt.find("w = (1, 0, 0, 1)"), std::string::npos);
  for (const auto* r : fig_rules()) {
    EXPECT_NE(prompt.find(r->name), std::string::npos) << r->name;
    EXPECT_NE(prompt.find(r->rule_id), std::string::npos) << r->rule_id;
  }
  EXPECT_NE(prompt.find(std::string(kPromptVersion)), std::string::npos);
  EXPECT_NE(prompt.find("```c\n"), std::string::npos);
  for (auto section : {"Role:", "Description:", "Rules:", "Example:", "Task:"}) {
    EXPECT_NE(prompt.find(section), std::string::npos) << section;
  }
}

TEST(EmbedPrompt, ZeroBitsStillListAllRules) {
  auto prompt = render_embed_prompt(loop_snippet(), WatermarkBits::parse("0000"), fig_rules());
  EXPECT_NE(prompt.find("w = (0, 0, 0, 0)"), std::string::npos);
  for (const auto* r : fig_rules()) EXPECT_NE(prompt.find(r->rule_id), std::string::npos);
}

TEST(EmbedPrompt, RejectsEmptyOrMismatchedRules) {
  EXPECT_THROW(render_embed_prompt(loop_snippet(), WatermarkBits::parse("1"), {}), InvalidArgument);
  EXPECT_THROW(render_embed_prompt(loop_snippet(), WatermarkBits::parse("10"), fig_rules()), InvalidArgument);
}

TEST(ExtractPrompt, ContainsBothBodiesAndPositions) {
  auto orig = CodeSnippet::make("a.c", Language::c, "int f(int itemCount) { return itemCount; }");
  auto wm = orig.with_text("int f(int item_count) { return item_count; }");
  auto prompt = render_extract_prompt(orig, wm, fig_rules());
  EXPECT_NE(prompt.find(orig.text), std::string::npos);
  EXPECT_NE(prompt.find(wm.text), std::string::npos);
  for (int k = 1; k <= 4; ++k) EXPECT_EQ(count(prompt, "  T" + std::to_string(k) + " = "), 1u);
  EXPECT_EQ(count(prompt, "  T5 = "), 0u);
  EXPECT_NO_THROW(render_extract_prompt(orig, orig, fig_rules()));
  EXPECT_THROW(render_extract_prompt(orig, wm, {}), InvalidArgument);
}

TEST(ReplyParsing, LastCodeBlockWins) {
  EXPECT_EQ(extract_code_block("first\n```c\nint a;\n```\nthen\n```python\nx = 1\n```\n"), "x = 1");
  EXPECT_THROW(extract_code_block("no code here"), ParseError);
  EXPECT_THROW(extract_code_block("```c\n```"), ParseError);
}

TEST(ReplyParsing, RankReplyKeepsOrderAndCategory) {
  auto ranked = parse_rank_reply("loops.while_to_do_while\nnaming.to_pascal\nloops.for_to_while\nloops.for_to_whiles",
                                 Category::loops);
  ASSERT_EQ(ranked.size(), 2u);
  EXPECT_EQ(ranked[0]->rule_id, "loops.while_to_do_while");
  EXPECT_EQ(ranked[1]->rule_id, "loops.for_to_while");
  EXPECT_TRUE(parse_rank_reply("nothing useful", Category::loops).empty());
}

TEST(ReplyParsing, Verdicts) {
  EXPECT_TRUE(parse_verdict("YES\nonly renamed"));
  EXPECT_FALSE(parse_verdict("NO, the loop bound changed"));
  EXPECT_THROW(parse_verdict("maybe"), ParseError);
}

TEST(ProviderConfig, Validation) {
  ProviderConfig c{"http://localhost:1/v1/chat/completions", "m"};
  EXPECT_NO_THROW(c.validate());
  auto bad = c;
  bad.temperature = 2.5;
  EXPECT_THROW(bad.validate(), InvalidArgument);
  bad = c;
  bad.max_retries = -1;
  EXPECT_THROW(bad.validate(), InvalidArgument);
  bad = c;
  bad.endpoint_url = "ftp://host/x";
  EXPECT_THROW(bad.validate(), InvalidArgument);
  bad = c;
  bad.model_name.clear();
  EXPECT_THROW(bad.validate(), InvalidArgument);
}

TEST(MockBackend, TransformDelegatesToRules) {
  auto mock = Backend::mock();
  EXPECT_EQ(mock.tag(), "mock");
  auto s = CodeSnippet::make("t.c", Language::c, "testStream();");
  auto v = mock.transform(s, catalog().at("naming.camel_to_snake"));
  EXPECT_TRUE(v.rule_confirmed);
  EXPECT_EQ(v.output_text, "test_stream();");
  auto r = CodeSnippet::make("r.c", Language::c, "return x;");
  auto none = mock.transform(r, catalog().at("loops.for_to_while"));
  EXPECT_FALSE(none.rule_confirmed);
  EXPECT_EQ(none.output_text, r.text);
  auto math = mock.transform(CodeSnippet::make("m.c", Language::c, "y = 2 * x;"), catalog().at("math.mul_to_add"));
  EXPECT_FALSE(math.rule_confirmed);
  EXPECT_EQ(mock.request_count(), 0u);
}

TEST(MockBackend, TransformMatchesApplyOverCorpus) {
  auto mock = Backend::mock();
  for (const auto& s : codemark::testing::bundled_corpus().snippets()) {
    for (const auto* r : catalog().deterministic_rules()) {
      if (!is_applicable(*r, s)) continue;
      EXPECT_EQ(mock.transform(s, *r).output_text, apply(*r, s).text) << r->rule_id << " on " << s.id;
    }
  }
}

TEST(MockBackend, RankRules) {
  auto mock = Backend::mock();
  auto ranked = mock.rank_rules(loop_snippet(), Category::loops);
  ASSERT_FALSE(ranked.empty());
  EXPECT_EQ(ranked.front()->rule_id, "loops.for_to_while");
  EXPECT_TRUE(mock.rank_rules(CodeSnippet::make("r.c", Language::c, "return x;"), Category::loops).empty());
  EXPECT_EQ(mock.rank_rules(loop_snippet(), Category::organization),
            mock.rank_rules(loop_snippet(), Category::organization));
  EXPECT_TRUE(mock.rank_rules(loop_snippet(), Category::math).empty());
}

TEST(MockBackend, RankedRulesAreApplicableOverCorpus) {
  auto mock = Backend::mock();
  for (const auto& s : codemark::testing::bundled_corpus().snippets()) {
    for (auto c : {Category::naming, Category::loops, Category::math, Category::organization}) {
      for (const auto* r : mock.rank_rules(s, c)) EXPECT_TRUE(is_applicable(*r, s)) << r->rule_id << " on " << s.id;
    }
  }
}

TEST(MockBackend, VerifySemantics) {
  auto mock = Backend::mock();
  auto s = loop_snippet();
  EXPECT_TRUE(mock.verify_semantics(s, s));
  std::string broken = s.text;
  broken.erase(broken.rfind('}'), 1);
  std::string notes;
  EXPECT_FALSE(mock.verify_semantics(s, s.with_text(broken), &notes));
  EXPECT_FALSE(notes.empty());
  auto changed_literal = CodeSnippet::make("l.c", Language::c, "int f() { return g(\"a\"); }");
  EXPECT_FALSE(mock.verify_semantics(changed_literal, changed_literal.with_text("int f() { return g(\"b\"); }")));
}

TEST(MockBackend, VerifySemanticsRunsHarnessWhenConfigured) {
  auto suite = std::make_shared<TestSuite>(TestSuite::load(codemark::testing::corpus_dir() / "tests.json"));
  if (!program_available(suite->commands.at(Language::c))) GTEST_SKIP() << "no C compiler";
  auto mock = Backend::mock(suite);
  const auto& s = codemark::testing::bundled_corpus().at("c/gcd_iterative.c");
  auto renamed = apply(catalog().at("naming.add_suffix"), s);
  EXPECT_TRUE(mock.verify_semantics(s, renamed));
  auto pos = renamed.text.find("return");
  ASSERT_NE(pos, std::string::npos);
  std::string wrong = renamed.text;
  wrong.insert(pos + 6, " 1 +");
  std::string notes;
  EXPECT_FALSE(mock.verify_semantics(s, renamed.with_text(wrong), &notes));
  EXPECT_NE(notes.find("tests failed"), std::string::npos) << notes;
}

TEST(MockBackend, ParaphraseNeedsRemote) {
  EXPECT_THROW(Backend::mock().paraphrase(loop_snippet()), MockUnsupported);
}

TEST(StructuralCheck, LiteralAndCommentMultisets) {
  auto s = CodeSnippet::make("s.c", Language::c, "int f() { /* a */ return 1; }");
  EXPECT_TRUE(structurally_equivalent(s, s.with_text("int f() {\n  /* a */\n  return 1;\n}")));
  EXPECT_FALSE(structurally_equivalent(s, s.with_text("int f() { return 1; }")));
  EXPECT_FALSE(structurally_equivalent(s, s.with_text("int f() { /* a */ return 1; ")));
}
