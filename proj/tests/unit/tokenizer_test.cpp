#include <gtest/gtest.h>

#include "codemark/identifiers.hpp"
#include "codemark/language.hpp"
#include "codemark/tokenizer.hpp"
#include "test_support.hpp"

using namespace codemark;

namespace {

std::vector<Token> significant(std::string_view text, Language lang) {
  std::vector<Token> out;
  for (auto& t : tokenize(text, lang)) {
    if (t.significant()) out.push_back(t);
  }
  return out;
}

}  // namespace

TEST(Language, TagsAndExtensions) {
  EXPECT_EQ(parse_language("cpp"), Language::cpp);
  EXPECT_THROW(parse_language("rust"), std::exception);
  EXPECT_EQ(language_from_extension(".cc"), Language::cpp);
  EXPECT_EQ(language_from_extension("cpp"), Language::cpp);
  EXPECT_EQ(language_from_extension(".py"), Language::python);
  EXPECT_EQ(language_from_extension(".rs"), Language::unknown);
  EXPECT_FALSE(is_brace_language(Language::python));
}

TEST(Tokenizer, ConcatenationReproducesSource) {
  for (const auto& s : codemark::testing::bundled_corpus().snippets()) {
    auto tokens = tokenize(s.text, s.language);
    EXPECT_EQ(join_tokens(tokens), s.text) << s.id;
    for (const auto& t : tokens) EXPECT_FALSE(t.unterminated) << s.id << ": " << t.text;
  }
}

TEST(Tokenizer, ClassifiesLexemes) {
  auto toks = significant("x += 0x1F; s = \"a\\\"b\"; c = 'q'; // note", Language::c);
  ASSERT_GE(toks.size(), 10u);
  EXPECT_EQ(toks[0].kind, TokenKind::identifier);
  EXPECT_TRUE(toks[1].is_op("+="));
  EXPECT_EQ(toks[2].kind, TokenKind::number);
  EXPECT_EQ(toks[2].text, "0x1F");
  EXPECT_EQ(toks[6].kind, TokenKind::literal);
  EXPECT_EQ(toks[6].text, "\"a\\\"b\"");
  auto all = tokenize("a; // note", Language::c);
  EXPECT_EQ(all.back().kind, TokenKind::comment);
}

TEST(Tokenizer, FlagsUnterminatedInput) {
  auto toks = tokenize("s = \"open\nx = 1", Language::c);
  bool flagged = false;
  for (const auto& t : toks) flagged |= t.unterminated;
  EXPECT_TRUE(flagged);
  toks = tokenize("/* never closed", Language::java);
  EXPECT_TRUE(toks.back().unterminated);
}

TEST(Tokenizer, PythonCommentsAndInterpolation) {
  auto toks = tokenize("x = 1  # hash\ny = f\"{x}\"\n", Language::python);
  bool comment = false, interp = false;
  for (const auto& t : toks) {
    comment |= t.kind == TokenKind::comment && t.text == "# hash";
    interp |= t.interpolated;
  }
  EXPECT_TRUE(comment);
  EXPECT_TRUE(interp);
  auto js = tokenize("let s = `a${b}`;", Language::javascript);
  bool templ = false;
  for (const auto& t : js) templ |= t.interpolated;
  EXPECT_TRUE(templ);
}

TEST(Tokenizer, ReservedWords) {
  EXPECT_TRUE(is_keyword("while"));
  EXPECT_TRUE(is_keyword("def"));
  EXPECT_TRUE(is_reserved("printf"));
  EXPECT_TRUE(is_reserved("len"));
  EXPECT_FALSE(is_reserved("total"));
  EXPECT_TRUE(is_declaration_type("int"));
  EXPECT_TRUE(is_declaration_type("let"));
}

TEST(Identifiers, FunctionNameAndVariables) {
  auto ids = analyze_identifiers(tokenize(
      "int sumOf(int* xs, int n) { int acc = 0; for (int i = 0; i < n; i++) acc += xs[i]; p->field = acc; "
      "return helper(acc); }",
      Language::c));
  EXPECT_EQ(ids.fn_name, "sumOf");
  EXPECT_EQ(ids.variables, (std::set<std::string>{"xs", "n", "acc", "i", "p"}));
  EXPECT_TRUE(ids.all.count("field"));
  EXPECT_TRUE(ids.all.count("helper"));
}

TEST(Identifiers, PythonKeywordArgumentsAreNotRenamable) {
  auto ids = analyze_identifiers(tokenize("def go(a):\n    return run(a, key=a)\n", Language::python));
  EXPECT_EQ(ids.fn_name, "go");
  EXPECT_EQ(ids.variables, (std::set<std::string>{"a"}));
}
