#include <algorithm>
#include <cctype>
#include <sstream>

#include "codemark/errors.hpp"
#include "codemark/llm_gateway.hpp"

namespace codemark {

namespace {

std::string fenced(const CodeSnippet& snippet) {
  std::string body = snippet.text;
  if (body.empty() || body.back() != '\n') body += '\n';
  return "```" + std::string(to_string(snippet.language)) + "\n" + body + "```\n";
}

std::string rule_line(std::size_t k, const TransformationRule& rule) {
  return "  T" + std::to_string(k) + " = " + rule.name + " [" + rule.rule_id + "]: " + rule.description + "\n";
}

std::string header() { return "(" + std::string(kPromptVersion) + ")\n\n"; }

bool word_boundary(std::string_view text, std::size_t pos, std::size_t len) {
  auto is_word = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.'; };
  bool left = pos == 0 || !is_word(text[pos - 1]);
  bool right = pos + len >= text.size() || !is_word(text[pos + len]);
  return left && right;
}

}  // namespace

std::string render_embed_prompt(const CodeSnippet& snippet, const WatermarkBits& bits,
                                const std::vector<const TransformationRule*>& sub_rules) {
  if (sub_rules.empty()) throw InvalidArgument("embedding prompt needs at least one sub-rule");
  if (sub_rules.size() != bits.size()) {
    throw InvalidArgument("embedding prompt has " + std::to_string(bits.size()) + " bits but " +
                          std::to_string(sub_rules.size()) + " sub-rules");
  }
  std::ostringstream p;
  p << header();
  p << "Role: You rewrite source code for a living and never alter what a program does or leave it "
       "unable to compile.\n\n";
  p << "Description: A watermark bitstring is hidden in a function by applying behavior-preserving "
       "rewrites. Each bit position owns one sub-rule.\n\n";
  p << "Rules:\n";
  p << "  - Where bit k is 1, perform one rewrite of kind T_k.\n";
  p << "  - Where bit k is 0, T_k must not be used.\n";
  p << "  - Respect the constraints stated for each sub-rule.\n";
  p << "  - Do not change behavior and do not add comments.\n";
  p << "  - Reply with the complete function in a single fenced code block.\n\n";
  p << "Example:\n";
  p << "  Given w = (1, 0, 1) with sub-rules {To lowercase, while to do-while, Add braces}, the reply "
       "lowercases the identifiers and adds braces, and leaves the while loop as it is.\n\n";
  p << "Task:\n";
  p << "  w = " << bits.tuple() << "\n";
  p << "  Sub-rules:\n";
  for (std::size_t k = 0; k < sub_rules.size(); ++k) p << rule_line(k + 1, *sub_rules[k]);
  p << "  Code:\n" << fenced(snippet);
  return p.str();
}

std::string render_extract_prompt(const CodeSnippet& original, const CodeSnippet& watermarked,
                                  const std::vector<const TransformationRule*>& sub_rules) {
  if (sub_rules.empty()) throw InvalidArgument("extraction prompt needs at least one sub-rule");
  std::ostringstream p;
  p << header();
  p << "Role: You spot small rewrites between two versions of the same function.\n\n";
  p << "Description: The second version was produced from the first by rewrites that encode one bit "
       "per position. Find out which rewrites happened.\n\n";
  p << "Rules:\n";
  p << "  - For position k, check only whether sub-rule T_k explains a difference.\n";
  p << "  - w_k is 1 when it does and 0 when it does not.\n";
  p << "  - Give one short reason per position, then the final line `w = (...)`.\n\n";
  p << "Example:\n";
  p << "  If only the loop changed from for to while and T_2 is for to while, answer w = (0, 1, 0).\n\n";
  p << "Task: recover w = (w_1, ..., w_" << sub_rules.size() << ").\n";
  p << "  Sub-rules:\n";
  for (std::size_t k = 0; k < sub_rules.size(); ++k) p << rule_line(k + 1, *sub_rules[k]);
  p << "  [ORIGINAL]\n" << fenced(original);
  p << "  [TRANSFORMED]\n" << fenced(watermarked);
  return p.str();
}

std::string render_rank_prompt(const CodeSnippet& snippet, Category category) {
  std::ostringstream p;
  p << header();
  p << "Role: You judge which refactorings fit a piece of code.\n\n";
  p << "Description: Order the candidate rewrites below by how naturally each one applies to the "
       "function. Leave out any that cannot apply.\n\n";
  p << "Rules:\n";
  p << "  - Only use ids from the candidate list.\n";
  p << "  - One id per line, best first, nothing else.\n\n";
  p << "Example:\n  loops.for_to_while\n  loops.while_to_do_while\n\n";
  p << "Task:\n  Candidates:\n";
  std::size_t k = 1;
  for (const auto* rule : catalog().category(category)) p << rule_line(k++, *rule);
  p << "  Code:\n" << fenced(snippet);
  return p.str();
}

std::string render_verify_prompt(const CodeSnippet& before, const CodeSnippet& after) {
  std::ostringstream p;
  p << header();
  p << "Role: You review refactorings for behavioral changes.\n\n";
  p << "Description: Decide whether the two functions return the same results and have the same side "
       "effects for every input.\n\n";
  p << "Rules:\n  - Answer YES or NO on the first line.\n  - A short reason may follow.\n\n";
  p << "Example:\n  YES\n  Only a variable was renamed.\n\n";
  p << "Task:\n  [BEFORE]\n" << fenced(before) << "  [AFTER]\n" << fenced(after);
  return p.str();
}

std::string render_paraphrase_prompt(const CodeSnippet& snippet) {
  std::ostringstream p;
  p << header();
  p << "Role: You clean up code for a maintainer.\n\n";
  p << "Description: Rewrite the function in your own style while keeping its exact behavior.\n\n";
  p << "Rules:\n  - Keep the signature callable the same way.\n  - Reply with one fenced code block.\n\n";
  p << "Task:\n" << fenced(snippet);
  return p.str();
}

std::string extract_code_block(std::string_view reply) {
  auto close = reply.rfind("```");
  if (close == std::string_view::npos) throw ParseError("reply contains no fenced code block");
  auto open = close == 0 ? std::string_view::npos : reply.rfind("```", close - 1);
  if (open == std::string_view::npos) throw ParseError("reply contains an unterminated code fence");
  auto body_start = reply.find('\n', open);
  if (body_start == std::string_view::npos || body_start >= close) {
    throw ParseError("reply code block is empty");
  }
  auto body = std::string(reply.substr(body_start + 1, close - body_start - 1));
  while (!body.empty() && (body.back() == '\n' || body.back() == '\r')) body.pop_back();
  if (body.empty()) throw ParseError("reply code block is empty");
  return body;
}

std::vector<const TransformationRule*> parse_rank_reply(std::string_view reply, Category category) {
  std::vector<std::pair<std::size_t, const TransformationRule*>> hits;
  for (const auto* rule : catalog().category(category)) {
    std::size_t pos = 0;
    while ((pos = reply.find(rule->rule_id, pos)) != std::string_view::npos) {
      if (word_boundary(reply, pos, rule->rule_id.size())) {
        hits.emplace_back(pos, rule);
        break;
      }
      pos += rule->rule_id.size();
    }
  }
  std::sort(hits.begin(), hits.end());
  std::vector<const TransformationRule*> out;
  for (const auto& h : hits) out.push_back(h.second);
  return out;
}

bool parse_verdict(std::string_view reply) {
  std::string upper;
  for (char c : reply) upper += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  std::size_t yes = std::string::npos, no = std::string::npos;
  for (std::size_t i = 0; i < upper.size(); ++i) {
    if (yes == std::string::npos && upper.compare(i, 3, "YES") == 0 && word_boundary(upper, i, 3)) yes = i;
    if (no == std::string::npos && upper.compare(i, 2, "NO") == 0 && word_boundary(upper, i, 2)) no = i;
  }
  if (yes == std::string::npos && no == std::string::npos) throw ParseError("verdict reply has neither YES nor NO");
  return no == std::string::npos || (yes != std::string::npos && yes < no);
}

}  // namespace codemark
