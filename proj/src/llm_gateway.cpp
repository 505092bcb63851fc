#include "codemark/llm_gateway.hpp"

#include <algorithm>
#include <cstdlib>

#include "codemark/evaluator.hpp"
#include "codemark/tokenizer.hpp"

namespace codemark {

namespace {

std::vector<std::string> sorted_texts(const std::vector<Token>& tokens, TokenKind kind) {
  std::vector<std::string> out;
  for (const auto& t : tokens) {
    if (t.kind == kind) out.push_back(t.text);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ChatMessage> user_message(std::string content) { return {{"user", std::move(content)}}; }

/// Code blocks come back without their final newline; restore the input's.
std::string match_final_newline(std::string_view input, std::string output) {
  if (!input.empty() && input.back() == '\n' && (output.empty() || output.back() != '\n')) output += '\n';
  return output;
}

}  // namespace

bool structurally_equivalent(const CodeSnippet& before, const CodeSnippet& after, std::string* why) {
  auto fail = [&](std::string reason) {
    if (why) *why = std::move(reason);
    return false;
  };
  if (before.text == after.text) return true;
  if (after.text.empty()) return fail("empty output");
  auto check = syntax_check(after);
  if (!check.ok && syntax_check(before).ok) return fail("output is malformed: " + check.notes);
  auto tb = tokenize(before.text, before.language);
  auto ta = tokenize(after.text, after.language);
  if (sorted_texts(tb, TokenKind::literal) != sorted_texts(ta, TokenKind::literal)) {
    return fail("string literals changed");
  }
  if (sorted_texts(tb, TokenKind::comment) != sorted_texts(ta, TokenKind::comment)) {
    return fail("comments changed");
  }
  return true;
}

Backend Backend::mock(std::shared_ptr<const TestSuite> tests) {
  Backend b;
  b.tests_ = std::move(tests);
  return b;
}

Backend Backend::remote(ProviderConfig config) {
  config.validate();
  const char* key = std::getenv(config.api_key_env.c_str());
  if (!key || !*key) throw CredentialError("environment variable " + config.api_key_env + " is not set");
  Backend b;
  b.client_ = std::make_shared<ChatClient>(std::move(config), key);
  return b;
}

std::string Backend::tag() const { return is_mock() ? "mock" : "remote:" + client_->config().model_name; }

std::size_t Backend::request_count() const { return client_ ? client_->request_count() : 0; }

TransformVerdict Backend::transform(const CodeSnippet& snippet, const TransformationRule& rule) const {
  TransformVerdict v;
  if (is_mock()) {
    if (!rule.deterministic) {
      v.output_text = snippet.text;
      v.notes = "no offline transformer for " + rule.rule_id;
      return v;
    }
    if (!is_applicable(rule, snippet)) {
      v.output_text = snippet.text;
      v.notes = rule.rule_id + " does not apply";
      return v;
    }
    v.output_text = apply_text(rule, snippet.text, snippet.language);
    v.rule_confirmed = true;
    return v;
  }
  auto prompt = render_embed_prompt(snippet, WatermarkBits::parse("1"), {&rule});
  v.output_text = match_final_newline(snippet.text, client_->complete_parsed(user_message(prompt), extract_code_block));
  v.rule_confirmed = v.output_text != snippet.text;
  if (!v.rule_confirmed) v.notes = "model returned the code unchanged";
  return v;
}

std::vector<const TransformationRule*> Backend::rank_rules(const CodeSnippet& snippet, Category category) const {
  std::vector<const TransformationRule*> ranked;
  if (is_mock()) {
    for (const auto* rule : catalog().category(category)) {
      if (is_applicable(*rule, snippet)) ranked.push_back(rule);
    }
    return ranked;
  }
  auto proposed = client_->complete_parsed(user_message(render_rank_prompt(snippet, category)),
                                           [category](const std::string& reply) {
                                             return parse_rank_reply(reply, category);
                                           });
  for (const auto* rule : proposed) {
    if (!rule->deterministic || is_applicable(*rule, snippet)) ranked.push_back(rule);
  }
  return ranked;
}

bool Backend::verify_semantics(const CodeSnippet& before, const CodeSnippet& after, std::string* notes) const {
  if (before.text == after.text) return true;
  std::string why;
  if (!structurally_equivalent(before, after, &why)) {
    if (notes) *notes = why;
    return false;
  }
  if (!is_mock()) {
    return client_->complete_parsed(user_message(render_verify_prompt(before, after)), parse_verdict);
  }
  if (!tests_) return true;
  auto result = run_tests(after, *tests_);
  switch (result.outcome) {
    case TestOutcome::pass:
      return true;
    case TestOutcome::fail:
      if (notes) *notes = "tests failed: " + result.reason;
      return false;
    case TestOutcome::skipped:
      if (notes) *notes = "tests skipped (" + result.reason + "), structural check only";
      return true;
  }
  return true;
}

std::string Backend::paraphrase(const CodeSnippet& snippet) const {
  if (is_mock()) throw MockUnsupported("paraphrasing needs a remote model backend");
  return match_final_newline(snippet.text,
                             client_->complete_parsed(user_message(render_paraphrase_prompt(snippet)), extract_code_block));
}

}  // namespace codemark
