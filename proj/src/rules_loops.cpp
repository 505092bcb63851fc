#include <set>

#include "engine.hpp"

namespace codemark::engine {
namespace {

bool contains_word(const SourceView& v, std::size_t begin, std::size_t end, std::string_view w) {
  for (std::size_t i = begin; i < end; ++i) {
    if (v.word(i, w)) return true;
  }
  return false;
}

// First significant token of the last depth-0 statement in the block body
// (open, close).
std::size_t last_statement(const SourceView& v, std::size_t open, std::size_t close) {
  std::size_t start = npos;
  std::size_t i = v.next_sig(open + 1);
  bool at_start = true;
  while (i < close) {
    if (at_start) start = i;
    at_start = false;
    const auto& t = v.toks[i];
    if ((t.is_op("(") || t.is_op("[") || t.is_op("{")) && v.match[i] != npos) {
      bool block = t.is_op("{");
      i = v.match[i];
      if (block) at_start = true;
    } else if (t.is_op(";")) {
      at_start = true;
    }
    i = v.next_sig(i + 1);
  }
  return start;
}

bool ends_abruptly(const SourceView& v, std::size_t stmt) {
  if (stmt == npos) return false;
  for (auto w : {"return", "break", "continue", "throw", "goto", "raise"}) {
    if (v.word(stmt, w)) return true;
  }
  return false;
}

// Names declared by a for-init such as `int i = 0, j = n`.
std::set<std::string> declared_names(const SourceView& v, std::size_t begin, std::size_t end) {
  std::set<std::string> names;
  auto sig = v.sig_range(begin, end);
  if (sig.size() < 2) return names;
  bool decl = is_declaration_type(v.toks[sig[0]].text) ||
              (v.ident(sig[0]) && v.ident(sig[1]));
  if (!decl) return names;
  for (auto [b, e] : split_top_level(v, begin, end, ",")) {
    std::size_t last_ident = npos;
    for (std::size_t i = b; i < e; ++i) {
      if (v.op(i, "=")) break;
      if (v.ident(i)) last_ident = i;
    }
    if (last_ident != npos) names.insert(v.toks[last_ident].text);
  }
  return names;
}

// Inserts `extra` before the trailing whitespace of a block body.
std::string append_to_body(const std::string& body, const std::string& extra,
                           const std::string& body_indent) {
  auto end = body.find_last_not_of(" \t\r\n");
  std::string head = end == std::string::npos ? "" : body.substr(0, end + 1);
  std::string tail = end == std::string::npos ? body : body.substr(end + 1);
  if (tail.find('\n') != std::string::npos) return head + "\n" + body_indent + extra + tail;
  if (head.empty()) return extra;
  return head + " " + extra + (tail.empty() ? "" : tail);
}

std::string body_indent(const SourceView& v, std::size_t open, std::size_t close,
                        const std::string& base) {
  auto first = v.next_sig(open + 1);
  if (first < close && open + 1 < first && v.toks[open + 1].has_newline()) return v.indent_of(first);
  for (std::size_t i = open + 1; i < close; ++i) {
    if (v.toks[i].kind == TokenKind::whitespace && v.toks[i].has_newline()) {
      auto j = v.next_sig(i);
      if (j < close) return v.indent_of(j);
    }
  }
  return base + "    ";
}

std::optional<std::size_t> c_for(Rewriter& rw, std::size_t i, std::size_t limit, std::string& out) {
  const auto& v = rw.view;
  if (!v.word(i, "for")) return std::nullopt;
  auto lp = v.next_sig(i + 1);
  if (!v.op(lp, "(") || v.match[lp] == npos) return std::nullopt;
  auto rp = v.match[lp];
  auto parts = split_top_level(v, lp + 1, rp, ";");
  if (parts.size() != 3) return std::nullopt;
  auto lb = v.next_sig(rp + 1);
  if (!v.op(lb, "{") || v.match[lb] == npos || v.match[lb] >= limit) return std::nullopt;
  auto rb = v.match[lb];
  if (contains_word(v, lb, rb, "continue")) return std::nullopt;
  auto init = v.trimmed(parts[0].first, parts[0].second);
  auto cond = v.trimmed(parts[1].first, parts[1].second);
  if (cond.empty()) return std::nullopt;
  auto prev = v.prev_sig(i);
  if (prev != npos && v.op(prev, ":")) return std::nullopt;
  if (ends_abruptly(v, last_statement(v, lb, rb))) return std::nullopt;
  if (v.has_comment(lp, rp)) return std::nullopt;

  bool wrap = !v.statement_start(i);
  for (const auto& name : declared_names(v, parts[0].first, parts[0].second)) {
    std::size_t inside = 0;
    for (std::size_t k = i; k <= rb; ++k) inside += v.word(k, name) ? 1 : 0;
    if (inside != v.count_word(name)) wrap = true;
  }

  std::string base = v.indent_of(i);
  std::string steps;
  for (auto [b, e] : split_top_level(v, parts[2].first, parts[2].second, ",")) {
    auto s = v.trimmed(b, e);
    if (s.empty()) continue;
    if (!steps.empty()) steps += " ";
    steps += s + ";";
  }
  std::string body = rw.render(lb + 1, rb);
  if (!steps.empty()) body = append_to_body(body, steps, body_indent(v, lb, rb, base));

  std::string loop = "while (" + cond + ")" + v.text(rp + 1, lb) + "{" + body + "}";
  std::string text = init.empty() ? loop : init + ";\n" + base + loop;
  out += wrap ? "{ " + text + " }" : text;
  return rb + 1;
}

std::optional<std::size_t> c_while(Rewriter& rw, std::size_t i, std::size_t limit, std::string& out) {
  const auto& v = rw.view;
  if (!v.word(i, "while")) return std::nullopt;
  auto prev = v.prev_sig(i);
  if (prev != npos && v.op(prev, "}") && v.match[prev] != npos) {
    auto before_block = v.prev_sig(v.match[prev]);
    if (before_block != npos && v.word(before_block, "do")) return std::nullopt;
  }
  if (prev != npos && v.op(prev, ":")) return std::nullopt;
  auto lp = v.next_sig(i + 1);
  if (!v.op(lp, "(") || v.match[lp] == npos) return std::nullopt;
  auto rp = v.match[lp];
  auto lb = v.next_sig(rp + 1);
  if (!v.op(lb, "{") || v.match[lb] == npos || v.match[lb] >= limit) return std::nullopt;
  auto rb = v.match[lb];
  for (std::size_t k = lp; k < rp; ++k) {
    const auto& t = v.toks[k];
    if (t.is_op("++") || t.is_op("--") || is_assignment_op(t)) return std::nullopt;
  }
  if (v.has_comment(lp, rp)) return std::nullopt;
  auto cond = v.text(lp, rp + 1);
  std::string gap = v.text(i + 1, lp);
  std::string text = "if" + gap + cond + " do" + v.text(rp + 1, lb) + "{" + rw.render(lb + 1, rb) +
                     "} while" + gap + cond + ";";
  out += v.statement_start(i) ? text : "{ " + text + " }";
  return rb + 1;
}

// Python: for v in range(...): with a block body.
std::optional<std::size_t> py_for(Rewriter& rw, const std::vector<PyLine>& lines, std::size_t i,
                                  std::string& out) {
  const auto& v = rw.view;
  if (!v.word(i, "for")) return std::nullopt;
  auto li = python_line_of(lines, i);
  if (li == npos || lines[li].begin != i) return std::nullopt;
  const auto& line = lines[li];
  auto sig = v.sig_range(line.begin, line.end);
  // for NAME in range ( ... ) :
  if (sig.size() < 7 || !v.ident(sig[1]) || !v.word(sig[2], "in") || !v.word(sig[3], "range") ||
      !v.op(sig[4], "(") || v.match[sig[4]] == npos) {
    return std::nullopt;
  }
  auto rp = v.match[sig[4]];
  auto colon = v.next_sig(rp + 1);
  if (!v.op(colon, ":") || colon != sig.back()) return std::nullopt;
  auto last = python_block_last(lines, li);
  if (last == li) return std::nullopt;
  if (last + 1 < lines.size() && v.word(lines[last + 1].begin, "else") &&
      lines[last + 1].indent == line.indent) {
    return std::nullopt;
  }
  const std::string var = v.toks[sig[1]].text;
  auto body_begin = lines[li + 1].begin;
  auto body_end = lines[last].end;

  auto args = split_top_level(v, sig[4] + 1, rp, ",");
  std::string start = "0", stop, step = "1";
  if (args.size() == 1) {
    stop = v.trimmed(args[0].first, args[0].second);
  } else if (args.size() == 2 || args.size() == 3) {
    start = v.trimmed(args[0].first, args[0].second);
    stop = v.trimmed(args[1].first, args[1].second);
    if (args.size() == 3) {
      auto s = v.sig_range(args[2].first, args[2].second);
      if (s.size() != 1 || v.toks[s[0]].kind != TokenKind::number) return std::nullopt;
      step = v.toks[s[0]].text;
      if (step.find_first_not_of("0123456789") != std::string::npos || std::stoll(step) <= 0) {
        return std::nullopt;
      }
    }
  } else {
    return std::nullopt;
  }
  if (start.empty() || stop.empty()) return std::nullopt;

  // The loop variable must live only in the loop and never be reassigned.
  std::size_t inside = 0;
  for (std::size_t k = i; k < body_end; ++k) inside += v.word(k, var) ? 1 : 0;
  if (inside != v.count_word(var)) return std::nullopt;
  auto body_sig = v.sig_range(body_begin, body_end);
  for (std::size_t n = 0; n < body_sig.size(); ++n) {
    const auto& t = v.toks[body_sig[n]];
    if (t.is_word("continue") || t.is_word("del")) return std::nullopt;
    if (t.is_word(var) && n + 1 < body_sig.size() && is_assignment_op(v.toks[body_sig[n + 1]])) {
      return std::nullopt;
    }
  }
  if (ends_abruptly(v, lines[last].begin)) return std::nullopt;

  // The stop bound is evaluated once by range() but on every pass by while.
  std::set<std::string> bound_names;
  bool needs_parens = false;
  for (auto [b, e] : args) {
    for (auto k : v.sig_range(b, e)) {
      const auto& t = v.toks[k];
      if (t.is_word(var)) return std::nullopt;
      if (t.is_op("(") && !(k > 0 && v.word(v.prev_sig(k), "len"))) return std::nullopt;
      if (t.kind == TokenKind::identifier) {
        if (is_keyword(t.text)) needs_parens = true;
        else if (t.text != "len") bound_names.insert(t.text);
      }
    }
  }
  for (auto k : v.sig_range(args.back().first, args.back().second)) {
    const auto& t = v.toks[k];
    if (t.kind == TokenKind::op && t.text != "(" && t.text != ")" && t.text != "." && t.text != "[" &&
        t.text != "]") {
      needs_parens = true;
    }
  }
  for (std::size_t n = 0; n < body_sig.size(); ++n) {
    const auto& t = v.toks[body_sig[n]];
    if (t.kind != TokenKind::identifier || !bound_names.contains(t.text)) continue;
    if (n > 0 && v.op(body_sig[n - 1], ".")) continue;
    std::size_t after = n + 1;
    if (after < body_sig.size() && v.op(body_sig[after], "[") && v.match[body_sig[after]] != npos) {
      auto close = v.match[body_sig[after]];
      while (after < body_sig.size() && body_sig[after] <= close) ++after;
    }
    if (after < body_sig.size()) {
      const auto& nt = v.toks[body_sig[after]];
      if (is_assignment_op(nt) || nt.is_op(".")) return std::nullopt;
    }
  }

  std::string body_indent = lines[li + 1].indent;
  std::string bound = needs_parens ? "(" + stop + ")" : stop;
  out += var + " = " + start + "\n" + line.indent + "while " + var + " < " + bound + ":";
  out += v.text(colon + 1, body_begin);
  out += rw.render(body_begin, body_end);
  out += "\n" + body_indent + var + " += " + step;
  return body_end;
}

}  // namespace

std::string for_to_while(const SourceView& v) {
  if (v.lang == Language::python) {
    auto lines = python_lines(v);
    Rewriter rw(v, [&](Rewriter& r, std::size_t i, std::size_t, std::string& out) {
      return py_for(r, lines, i, out);
    });
    return rw.render_all();
  }
  Rewriter rw(v, c_for);
  return rw.render_all();
}

std::string while_to_do_while(const SourceView& v) {
  if (v.lang == Language::python) return v.text(0, v.size());
  Rewriter rw(v, c_while);
  return rw.render_all();
}

}  // namespace codemark::engine
