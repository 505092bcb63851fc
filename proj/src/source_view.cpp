#include "engine.hpp"

#include <algorithm>

namespace codemark::engine {

SourceView::SourceView(std::string_view text, Language lang)
    : lang(lang), toks(tokenize(text, lang)), match(toks.size(), npos), preprocessor(toks.size(), false) {
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    const auto& t = toks[i];
    if (t.kind != TokenKind::op) continue;
    if (t.text == "(" || t.text == "[" || t.text == "{") {
      stack.push_back(i);
    } else if (t.text == ")" || t.text == "]" || t.text == "}") {
      char want = t.text == ")" ? '(' : t.text == "]" ? '[' : '{';
      if (!stack.empty() && toks[stack.back()].text[0] == want) {
        match[i] = stack.back();
        match[stack.back()] = i;
        stack.pop_back();
      }
    }
  }
  if (is_brace_language(lang)) {
    bool line_start = true;
    bool in_pp = false;
    for (std::size_t i = 0; i < toks.size(); ++i) {
      const auto& t = toks[i];
      if (t.kind == TokenKind::whitespace) {
        if (t.has_newline()) {
          // A trailing backslash continues a directive.
          bool continued = in_pp && i > 0 && !toks[i - 1].text.empty() && toks[i - 1].text.back() == '\\';
          line_start = true;
          if (!continued) in_pp = false;
        }
        preprocessor[i] = in_pp;
        continue;
      }
      if (line_start && t.text.starts_with("#")) in_pp = true;
      line_start = false;
      preprocessor[i] = in_pp;
    }
  }
}

std::size_t SourceView::next_sig(std::size_t i) const {
  while (i < toks.size() && !toks[i].significant()) ++i;
  return i;
}

std::size_t SourceView::prev_sig(std::size_t i) const {
  while (i > 0) {
    --i;
    if (toks[i].significant()) return i;
  }
  return npos;
}

std::string SourceView::text(std::size_t begin, std::size_t end) const {
  std::string out;
  for (std::size_t i = begin; i < end && i < toks.size(); ++i) out += toks[i].text;
  return out;
}

std::string SourceView::trimmed(std::size_t begin, std::size_t end) const {
  while (begin < end && toks[begin].kind == TokenKind::whitespace) ++begin;
  while (end > begin && toks[end - 1].kind == TokenKind::whitespace) --end;
  return text(begin, end);
}

std::string SourceView::indent_of(std::size_t i) const {
  std::string before;
  std::size_t j = i;
  while (j > 0) {
    --j;
    const auto& t = toks[j].text;
    auto nl = t.rfind('\n');
    if (nl != std::string::npos) {
      before = t.substr(nl + 1) + before;
      break;
    }
    before = t + before;
  }
  std::size_t k = 0;
  while (k < before.size() && (before[k] == ' ' || before[k] == '\t')) ++k;
  return before.substr(0, k);
}

bool SourceView::statement_start(std::size_t i) const {
  auto p = prev_sig(i);
  return p == npos || op(p, ";") || op(p, "{") || op(p, "}");
}

std::vector<std::size_t> SourceView::sig_range(std::size_t begin, std::size_t end) const {
  std::vector<std::size_t> out;
  for (std::size_t i = begin; i < end && i < toks.size(); ++i) {
    if (toks[i].significant()) out.push_back(i);
  }
  return out;
}

std::size_t SourceView::count_word(std::string_view name) const {
  return static_cast<std::size_t>(
      std::count_if(toks.begin(), toks.end(), [&](const Token& t) { return t.is_word(name); }));
}

bool SourceView::has_comment(std::size_t begin, std::size_t end) const {
  for (std::size_t i = begin; i < end && i < toks.size(); ++i) {
    if (toks[i].kind == TokenKind::comment) return true;
  }
  return false;
}

std::vector<std::pair<std::size_t, std::size_t>> split_top_level(const SourceView& v,
                                                                 std::size_t begin,
                                                                 std::size_t end,
                                                                 std::string_view sep) {
  std::vector<std::pair<std::size_t, std::size_t>> parts;
  std::size_t start = begin;
  std::size_t i = begin;
  while (i < end) {
    const auto& t = v.toks[i];
    if ((t.is_op("(") || t.is_op("[") || t.is_op("{")) && v.match[i] != npos && v.match[i] < end) {
      i = v.match[i] + 1;
      continue;
    }
    if (t.kind == TokenKind::op ? t.text == sep : (t.kind == TokenKind::identifier && t.text == sep)) {
      parts.emplace_back(start, i);
      start = i + 1;
    }
    ++i;
  }
  parts.emplace_back(start, end);
  return parts;
}

bool is_assignment_op(const Token& t) {
  static constexpr std::string_view ops[] = {"=",  "+=", "-=",  "*=",  "/=",  "%=",  "&=",
                                             "|=", "^=", "<<=", ">>=", ">>>=", "**=", "//=",
                                             ":=", "?\?="};
  if (t.kind != TokenKind::op) return false;
  return std::find(std::begin(ops), std::end(ops), t.text) != std::end(ops);
}

std::string Rewriter::render(std::size_t begin, std::size_t end) {
  std::string out;
  std::size_t i = begin;
  while (i < end) {
    if (auto next = handler_(*this, i, end, out)) {
      i = *next;
    } else {
      out += view.toks[i].text;
      ++i;
    }
  }
  return out;
}

std::vector<PyLine> python_lines(const SourceView& v) {
  std::vector<PyLine> lines;
  int depth = 0;
  bool open = false;
  std::string pending_indent;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& t = v.toks[i];
    if (t.kind == TokenKind::whitespace) {
      if (depth == 0 && t.has_newline()) {
        open = false;
        pending_indent = t.text.substr(t.text.rfind('\n') + 1);
      } else if (i == 0) {
        pending_indent = t.text;
      }
      continue;
    }
    if (!open) {
      PyLine line;
      line.begin = i;
      line.indent = pending_indent;
      line.comment_only = true;
      lines.push_back(line);
      open = true;
    }
    auto& line = lines.back();
    line.end = i + 1;
    if (t.kind != TokenKind::comment) line.comment_only = false;
    if (t.is_op("(") || t.is_op("[") || t.is_op("{")) ++depth;
    if ((t.is_op(")") || t.is_op("]") || t.is_op("}")) && depth > 0) --depth;
  }
  return lines;
}

std::size_t python_block_last(const std::vector<PyLine>& lines, std::size_t h) {
  std::size_t last = h;
  for (std::size_t j = h + 1; j < lines.size(); ++j) {
    if (lines[j].comment_only) continue;
    if (lines[j].indent.size() <= lines[h].indent.size()) break;
    last = j;
  }
  return last;
}

std::size_t python_line_of(const std::vector<PyLine>& lines, std::size_t token) {
  auto it = std::upper_bound(lines.begin(), lines.end(), token,
                             [](std::size_t tok, const PyLine& l) { return tok < l.begin; });
  if (it == lines.begin()) return npos;
  --it;
  return token < it->end ? static_cast<std::size_t>(it - lines.begin()) : npos;
}

}  // namespace codemark::engine
