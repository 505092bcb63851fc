#include "codemark/identifiers.hpp"

#include <cctype>
#include <map>
#include <vector>

namespace codemark {
namespace {

bool is_member_op(const Token& t) {
  return t.is_op(".") || t.is_op("->") || t.is_op("::") || t.is_op("?.");
}

void collect_words(std::string_view text, std::set<std::string>& out) {
  std::size_t i = 0;
  while (i < text.size()) {
    auto c = static_cast<unsigned char>(text[i]);
    if (std::isalpha(c) || c == '_' || c == '$') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_' || text[j] == '$')) {
        ++j;
      }
      out.emplace(text.substr(i, j - i));
      i = j;
    } else {
      ++i;
    }
  }
}

}  // namespace

IdentifierAnalysis analyze_identifiers(std::span<const Token> tokens) {
  IdentifierAnalysis out;
  std::vector<const Token*> sig;
  std::set<std::string> interpolated_words;
  for (const auto& t : tokens) {
    if (t.significant()) sig.push_back(&t);
    if (t.kind == TokenKind::literal && t.interpolated) collect_words(t.text, interpolated_words);
  }

  int depth = 0;
  for (std::size_t k = 0; k < sig.size(); ++k) {
    const Token& t = *sig[k];
    if (t.is_op("(") && depth == 0 && k > 0 && sig[k - 1]->kind == TokenKind::identifier &&
        !is_keyword(sig[k - 1]->text)) {
      out.fn_name = sig[k - 1]->text;
      break;
    }
    if (t.is_op("(") || t.is_op("{") || t.is_op("[")) ++depth;
    if (t.is_op(")") || t.is_op("}") || t.is_op("]")) depth = depth > 0 ? depth - 1 : 0;
  }

  // Per spelling: blocked for renaming at all, and blocked other than as a callee.
  std::map<std::string, std::pair<bool, bool>> flags;
  int paren_depth = 0;
  for (std::size_t k = 0; k < sig.size(); ++k) {
    const Token& t = *sig[k];
    if (t.is_op("(")) ++paren_depth;
    if (t.is_op(")") && paren_depth > 0) --paren_depth;
    if (t.kind != TokenKind::identifier) continue;
    out.all.insert(t.text);
    auto& [blocked, hard_blocked] = flags[t.text];
    const Token* prev = k > 0 ? sig[k - 1] : nullptr;
    const Token* next = k + 1 < sig.size() ? sig[k + 1] : nullptr;

    bool member = prev && is_member_op(*prev);
    bool qualifier = next && next->is_op("::");
    bool callee = next && next->is_op("(");
    bool keyword_arg = next && next->is_op("=") && prev && (prev->is_op("(") || prev->is_op(",")) &&
                       paren_depth > 0 && k + 2 < sig.size() && !sig[k + 2]->is_op("=");
    bool literal_key = next && next->is_op(":") && prev && (prev->is_op("{") || prev->is_op(","));

    if (member || qualifier || literal_key || interpolated_words.contains(t.text)) {
      blocked = hard_blocked = true;
    }
    if (callee) blocked = true;
    if (keyword_arg && paren_depth > 0) {
      // Only a keyword argument when the enclosing paren is a call, not a
      // `for (` header.
      std::size_t j = k;
      int d = 0;
      while (j > 0) {
        --j;
        if (sig[j]->is_op(")")) ++d;
        if (sig[j]->is_op("(")) {
          if (d == 0) break;
          --d;
        }
      }
      bool call_paren = j > 0 && sig[j - 1]->kind == TokenKind::identifier &&
                        !is_keyword(sig[j - 1]->text);
      if (call_paren) blocked = hard_blocked = true;
    }
    if (is_reserved(t.text)) blocked = hard_blocked = true;
  }

  for (const auto& [name, f] : flags) {
    if (name == out.fn_name) continue;
    if (!f.first) out.variables.insert(name);
  }
  if (!out.fn_name.empty()) out.fn_name_renamable = !flags[out.fn_name].second;
  return out;
}

}  // namespace codemark
