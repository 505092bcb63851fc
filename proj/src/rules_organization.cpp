#include <algorithm>
#include <set>

#include "codemark/identifiers.hpp"
#include "engine.hpp"

namespace codemark::engine {
namespace {

bool is_python(const SourceView& v) { return v.lang == Language::python; }

// Index of the ';' ending the statement that starts at i, skipping nested
// brackets; npos when none before limit.
std::size_t statement_end(const SourceView& v, std::size_t i, std::size_t limit) {
  while (i < limit) {
    const auto& t = v.toks[i];
    if ((t.is_op("(") || t.is_op("[") || t.is_op("{")) && v.match[i] != npos) {
      i = v.match[i] + 1;
      continue;
    }
    if (t.is_op(")") || t.is_op("]") || t.is_op("}")) return npos;
    if (t.is_op(";")) return i;
    ++i;
  }
  return npos;
}

bool line_start(const std::vector<PyLine>& lines, std::size_t i) {
  auto li = python_line_of(lines, i);
  return li != npos && lines[li].begin == i;
}

// ---------------------------------------------------------------- optimize_cond

std::optional<std::size_t> c_optimize(Rewriter& rw, std::size_t i, std::size_t limit, std::string& out) {
  const auto& v = rw.view;
  if (!v.word(i, "if")) return std::nullopt;
  auto lp = v.next_sig(i + 1);
  if (!v.op(lp, "(") || v.match[lp] == npos) return std::nullopt;
  auto rp = v.match[lp];
  auto lb = v.next_sig(rp + 1);
  if (!v.op(lb, "{") || v.match[lb] == npos) return std::nullopt;
  auto rb = v.match[lb];
  auto e = v.next_sig(rb + 1);
  if (!v.word(e, "else")) return std::nullopt;
  auto lb2 = v.next_sig(e + 1);
  if (!v.op(lb2, "{") || v.match[lb2] == npos || v.match[lb2] >= limit) return std::nullopt;
  auto rb2 = v.match[lb2];
  out += "if" + v.text(i + 1, lp) + "(!(" + v.trimmed(lp + 1, rp) + "))" + v.text(rp + 1, lb) + "{" +
         rw.render(lb2 + 1, rb2) + "}" + v.text(rb + 1, e) + "else" + v.text(e + 1, lb2) + "{" +
         rw.render(lb + 1, rb) + "}";
  return rb2 + 1;
}

bool header_colon_clean(const SourceView& v, std::size_t colon, std::size_t next_line_begin) {
  for (std::size_t k = colon + 1; k < next_line_begin; ++k) {
    if (v.toks[k].kind != TokenKind::whitespace) return false;
  }
  return true;
}

std::optional<std::size_t> py_optimize(Rewriter& rw, const std::vector<PyLine>& lines, std::size_t i,
                                       std::string& out) {
  const auto& v = rw.view;
  if (!(v.word(i, "if") || v.word(i, "elif")) || !line_start(lines, i)) return std::nullopt;
  auto li = python_line_of(lines, i);
  auto sig = v.sig_range(lines[li].begin, lines[li].end);
  auto colon = sig.back();
  if (sig.size() < 3 || !v.op(colon, ":")) return std::nullopt;
  auto last_a = python_block_last(lines, li);
  if (last_a == li || last_a + 2 >= lines.size()) return std::nullopt;
  const auto& else_line = lines[last_a + 1];
  auto else_sig = v.sig_range(else_line.begin, else_line.end);
  if (else_line.indent != lines[li].indent || else_sig.size() != 2 || !v.word(else_sig[0], "else") ||
      !v.op(else_sig[1], ":")) {
    return std::nullopt;
  }
  auto last_b = python_block_last(lines, last_a + 1);
  if (last_b == last_a + 1) return std::nullopt;
  const auto& a_first = lines[li + 1];
  const auto& b_first = lines[last_a + 2];
  if (a_first.indent != b_first.indent) return std::nullopt;
  if (!header_colon_clean(v, colon, a_first.begin) || !header_colon_clean(v, else_sig[1], b_first.begin)) {
    return std::nullopt;
  }
  auto a_end = lines[last_a].end;
  auto b_end = lines[last_b].end;
  out += v.toks[i].text + " not (" + v.trimmed(i + 1, colon) + "):" + v.text(colon + 1, a_first.begin) +
         rw.render(b_first.begin, b_end) + v.text(a_end, else_line.begin) + "else:" +
         v.text(else_sig[1] + 1, b_first.begin) + rw.render(a_first.begin, a_end);
  return b_end;
}

// ---------------------------------------------------------------- reorder_decl

struct SimpleDecl {
  std::size_t begin = 0;
  std::size_t end = 0;  // one past the ';'
  std::string name;
  std::set<std::string> words;
};

std::optional<SimpleDecl> c_simple_decl(const SourceView& v, std::size_t i, std::size_t limit) {
  if (!v.ident(i) || !is_declaration_type(v.toks[i].text) || !v.statement_start(i)) return std::nullopt;
  SimpleDecl d;
  d.begin = i;
  std::size_t k = i;
  while (k < limit && v.ident(k) && is_declaration_type(v.toks[k].text)) k = v.next_sig(k + 1);
  while (k < limit && (v.op(k, "*") || v.op(k, "&"))) k = v.next_sig(k + 1);
  if (!v.ident(k) || is_keyword(v.toks[k].text)) return std::nullopt;
  d.name = v.toks[k].text;
  for (std::size_t j = i; j < limit; ++j) {
    const auto& t = v.toks[j];
    if (t.is_op(";")) {
      d.end = j + 1;
      return d;
    }
    if (t.is_op("(") || t.is_op("{") || t.is_op("}") || t.is_op(")") || t.is_op(",") || t.is_op("++") ||
        t.is_op("--") || t.kind == TokenKind::comment) {
      return std::nullopt;
    }
    if (t.kind == TokenKind::identifier) d.words.insert(t.text);
  }
  return std::nullopt;
}

bool independent(const SimpleDecl& a, const SimpleDecl& b) {
  return a.name != b.name && !a.words.contains(b.name) && !b.words.contains(a.name);
}

std::optional<std::size_t> c_reorder(Rewriter& rw, std::size_t i, std::size_t limit, std::string& out) {
  const auto& v = rw.view;
  auto a = c_simple_decl(v, i, limit);
  if (!a) return std::nullopt;
  auto j = v.next_sig(a->end);
  auto b = c_simple_decl(v, j, limit);
  if (!b) return std::nullopt;
  a->words.erase(a->name);
  b->words.erase(b->name);
  if (!independent(*a, *b)) return std::nullopt;
  out += v.text(b->begin, b->end) + v.text(a->end, b->begin) + v.text(a->begin, a->end);
  return b->end;
}

std::optional<SimpleDecl> py_simple_assign(const SourceView& v, const PyLine& line) {
  if (line.comment_only || v.has_comment(line.begin, line.end)) return std::nullopt;
  auto sig = v.sig_range(line.begin, line.end);
  if (sig.size() < 3 || !v.ident(sig[0]) || is_keyword(v.toks[sig[0]].text) || !v.op(sig[1], "=")) {
    return std::nullopt;
  }
  SimpleDecl d{line.begin, line.end, v.toks[sig[0]].text, {}};
  for (std::size_t n = 2; n < sig.size(); ++n) {
    const auto& t = v.toks[sig[n]];
    if (t.is_op("(") || t.is_op(";") || is_assignment_op(t) || t.is_word("yield") || t.is_word("await") ||
        t.is_word("lambda")) {
      return std::nullopt;
    }
    if (t.kind == TokenKind::identifier) d.words.insert(t.text);
  }
  return d;
}

std::optional<std::size_t> py_reorder(const SourceView& v, const std::vector<PyLine>& lines, std::size_t i,
                                      std::string& out) {
  if (!line_start(lines, i)) return std::nullopt;
  auto li = python_line_of(lines, i);
  if (li + 1 >= lines.size() || lines[li + 1].indent != lines[li].indent) return std::nullopt;
  auto a = py_simple_assign(v, lines[li]);
  auto b = py_simple_assign(v, lines[li + 1]);
  if (!a || !b || !independent(*a, *b)) return std::nullopt;
  out += v.text(b->begin, b->end) + v.text(a->end, b->begin) + v.text(a->begin, a->end);
  return b->end;
}

// ---------------------------------------------------------------- swap_params

bool simple_argument(const SourceView& v, std::size_t begin, std::size_t end) {
  auto sig = v.sig_range(begin, end);
  if (sig.empty()) return false;
  if (v.op(sig[0], "*") || v.op(sig[0], "**") || v.op(sig[0], "...")) return false;
  for (auto k : sig) {
    const auto& t = v.toks[k];
    if (t.is_op("(") || t.is_op("++") || t.is_op("--") || is_assignment_op(t) || t.is_word("await") ||
        t.is_word("yield") || t.is_word("new")) {
      return false;
    }
  }
  return true;
}

std::optional<std::size_t> swap_site(Rewriter& rw, std::size_t i, std::size_t limit, std::string& out) {
  const auto& v = rw.view;
  static const std::set<std::string, std::less<>> commutative = {"max", "min", "fmax", "fmin", "hypot"};
  if (!v.ident(i) || !commutative.contains(v.toks[i].text)) return std::nullopt;
  auto lp = v.next_sig(i + 1);
  if (!v.op(lp, "(") || v.match[lp] == npos || v.match[lp] >= limit) return std::nullopt;
  auto prev = v.prev_sig(i);
  if (prev != npos) {
    auto owner = v.prev_sig(prev);
    if (v.op(prev, ".") && !(owner != npos && (v.word(owner, "Math") || v.word(owner, "math")))) {
      return std::nullopt;
    }
    if (v.op(prev, "::") && !(owner != npos && v.word(owner, "std"))) return std::nullopt;
    if (v.op(prev, "->") || v.op(prev, "?.")) return std::nullopt;
    if (v.word(prev, "def") || v.word(prev, "function")) return std::nullopt;
  }
  auto rp = v.match[lp];
  if (v.has_comment(lp, rp)) return std::nullopt;
  auto args = split_top_level(v, lp + 1, rp, ",");
  if (args.size() != 2) return std::nullopt;
  if (!simple_argument(v, args[0].first, args[0].second) || !simple_argument(v, args[1].first, args[1].second)) {
    return std::nullopt;
  }
  auto a = v.sig_range(args[0].first, args[0].second);
  auto b = v.sig_range(args[1].first, args[1].second);
  out += v.text(i, lp + 1) + v.text(lp + 1, a.front()) + v.text(b.front(), b.back() + 1) +
         v.text(a.back() + 1, b.front()) + v.text(a.front(), a.back() + 1) + v.text(b.back() + 1, rp + 1);
  return rp + 1;
}

// ---------------------------------------------------------------- spacing

bool operand_before(const SourceView& v, std::size_t i) {
  auto p = v.prev_sig(i);
  if (p == npos) return false;
  const auto& t = v.toks[p];
  switch (t.kind) {
    case TokenKind::identifier: return !is_keyword(t.text);
    case TokenKind::number:
    case TokenKind::literal: return true;
    case TokenKind::op: return t.text == ")" || t.text == "]";
    default: return false;
  }
}

std::string pad(const SourceView& v, const std::function<bool(std::size_t)>& before,
                const std::function<bool(std::size_t)>& after) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    bool sp_before = !v.preprocessor[i] && before(i) && i > 0 && v.toks[i - 1].kind != TokenKind::whitespace;
    bool sp_after = !v.preprocessor[i] && after(i) && i + 1 < v.size() &&
                    v.toks[i + 1].kind != TokenKind::whitespace;
    if (sp_before) out += ' ';
    out += v.toks[i].text;
    if (sp_after) out += ' ';
  }
  return out;
}

bool binary_op(const SourceView& v, std::size_t i) {
  static const std::set<std::string, std::less<>> always = {
      "/", "%", "<", ">", "<=", ">=", "==", "!=", "===", "!==", "&&", "||", "|", "^", "<<", ">>", ">>>", "//", "??"};
  static const std::set<std::string, std::less<>> needs_operand = {"+", "-", "*", "&", "**"};
  const auto& t = v.toks[i];
  if (t.kind != TokenKind::op) return false;
  if (always.contains(t.text)) return true;
  return needs_operand.contains(t.text) && operand_before(v, i);
}

// ---------------------------------------------------------------- add_braces

std::optional<std::size_t> brace_site(Rewriter& rw, std::size_t i, std::size_t limit, std::string& out) {
  const auto& v = rw.view;
  static const std::set<std::string, std::less<>> compound = {"if",   "for",  "while", "do",     "switch",
                                                               "try",  "else", "case",  "default"};
  std::size_t body = npos;
  if (v.word(i, "if") || v.word(i, "for") || v.word(i, "while")) {
    auto lp = v.next_sig(i + 1);
    if (!v.op(lp, "(") || v.match[lp] == npos) return std::nullopt;
    body = v.next_sig(v.match[lp] + 1);
  } else if (v.word(i, "else")) {
    body = v.next_sig(i + 1);
  } else if (v.word(i, "return")) {
    auto p = v.prev_sig(i);
    if (!(p == npos || v.op(p, ";") || v.op(p, "}"))) return std::nullopt;
    auto semi = statement_end(v, i, limit);
    if (semi == npos || v.has_comment(i, semi)) return std::nullopt;
    out += "{ " + v.text(i, semi + 1) + " }";
    return semi + 1;
  } else {
    return std::nullopt;
  }
  if (body >= limit || v.op(body, "{") || v.op(body, ";")) return std::nullopt;
  if (v.ident(body) && compound.contains(v.toks[body].text)) return std::nullopt;
  auto semi = statement_end(v, body, limit);
  if (semi == npos) return std::nullopt;
  out += v.text(i, body) + "{ " + v.text(body, semi + 1) + " }";
  return semi + 1;
}

// ---------------------------------------------------------------- reorder_cond

bool simple_operand(const SourceView& v, const std::vector<std::size_t>& sig) {
  static const std::set<std::string, std::less<>> bad_ops = {"(",  ")",  "[",  "]",  ".",  "->", "?.", "/",
                                                             "%",  "*",  "++", "--", "?",  "::", "&&", "||",
                                                             "??", "//", "**", ":"};
  static const std::set<std::string, std::less<>> bad_words = {
      "null", "NULL", "nullptr", "undefined", "None",  "in",  "is",    "instanceof",
      "typeof", "new", "await",  "delete",    "and",   "or",  "lambda", "yield", "not"};
  if (sig.empty()) return false;
  for (auto k : sig) {
    const auto& t = v.toks[k];
    if (t.kind == TokenKind::op && (bad_ops.contains(t.text) || is_assignment_op(t))) return false;
    if (t.kind == TokenKind::identifier && bad_words.contains(t.text)) return false;
  }
  return true;
}

// Emits [begin, end) with the two operands around a single connective swapped.
bool swap_operands(const SourceView& v, std::size_t begin, std::size_t end, std::string& out) {
  auto sig = v.sig_range(begin, end);
  std::size_t conn = npos;
  for (std::size_t k = begin; k < end; ++k) {
    const auto& t = v.toks[k];
    bool c = is_python(v) ? (t.is_word("and") || t.is_word("or")) : (t.is_op("&&") || t.is_op("||"));
    if (!c) continue;
    if (conn != npos) return false;
    conn = k;
  }
  if (conn == npos || v.has_comment(begin, end)) return false;
  auto a = v.sig_range(begin, conn);
  auto b = v.sig_range(conn + 1, end);
  if (!simple_operand(v, a) || !simple_operand(v, b)) return false;
  out += v.text(begin, a.front()) + v.text(b.front(), b.back() + 1) + v.text(a.back() + 1, b.front()) +
         v.text(a.front(), a.back() + 1) + v.text(b.back() + 1, end);
  return true;
}

// ---------------------------------------------------------------- inline_temp_var

std::optional<std::size_t> c_inline(Rewriter& rw, std::size_t i, std::size_t limit, std::string& out,
                                    const std::string& return_type) {
  const auto& v = rw.view;
  if (!v.ident(i) || !v.statement_start(i)) return std::nullopt;
  const auto& type = v.toks[i].text;
  bool generic = type == "let" || type == "const" || type == "var" || type == "auto";
  if (!generic && type != return_type) return std::nullopt;
  auto name = v.next_sig(i + 1);
  if (!v.ident(name) || is_keyword(v.toks[name].text)) return std::nullopt;
  auto eq = v.next_sig(name + 1);
  if (!v.op(eq, "=")) return std::nullopt;
  auto semi = statement_end(v, eq, limit);
  if (semi == npos || split_top_level(v, eq + 1, semi, ",").size() != 1) return std::nullopt;
  auto ret = v.next_sig(semi + 1);
  if (!v.word(ret, "return")) return std::nullopt;
  auto ret_name = v.next_sig(ret + 1);
  auto ret_semi = v.next_sig(ret_name + 1);
  if (!v.word(ret_name, v.toks[name].text) || !v.op(ret_semi, ";") || ret_semi >= limit) return std::nullopt;
  if (v.count_word(v.toks[name].text) != 2 || v.has_comment(i, ret_semi)) return std::nullopt;
  auto expr = v.trimmed(eq + 1, semi);
  if (expr.empty()) return std::nullopt;
  out += "return " + expr + ";";
  return ret_semi + 1;
}

std::optional<std::size_t> py_inline(const SourceView& v, const std::vector<PyLine>& lines, std::size_t i,
                                     std::string& out) {
  if (!line_start(lines, i)) return std::nullopt;
  auto li = python_line_of(lines, i);
  if (li + 1 >= lines.size() || lines[li + 1].indent != lines[li].indent) return std::nullopt;
  auto a = v.sig_range(lines[li].begin, lines[li].end);
  auto b = v.sig_range(lines[li + 1].begin, lines[li + 1].end);
  if (a.size() < 3 || !v.ident(a[0]) || is_keyword(v.toks[a[0]].text) || !v.op(a[1], "=")) return std::nullopt;
  if (b.size() != 2 || !v.word(b[0], "return") || !v.word(b[1], v.toks[a[0]].text)) return std::nullopt;
  if (v.count_word(v.toks[a[0]].text) != 2) return std::nullopt;
  if (v.has_comment(lines[li].begin, lines[li + 1].end)) return std::nullopt;
  for (std::size_t n = 2; n < a.size(); ++n) {
    if (v.op(a[n], ";") || is_assignment_op(v.toks[a[n]]) || v.word(a[n], "yield")) return std::nullopt;
  }
  out += "return " + v.text(a[2], lines[li].end);
  return lines[li + 1].end;
}

std::string return_type_of(const SourceView& v) {
  auto ids = analyze_identifiers(v.toks);
  if (ids.fn_name.empty()) return {};
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v.word(i, ids.fn_name) || !v.op(v.next_sig(i + 1), "(")) continue;
    auto p = v.prev_sig(i);
    if (p != npos && v.ident(p)) return v.toks[p].text;
    return {};
  }
  return {};
}

// ---------------------------------------------------------------- split_decl

std::optional<std::size_t> c_split(Rewriter& rw, std::size_t i, std::size_t limit, std::string& out) {
  const auto& v = rw.view;
  if (!v.ident(i) || !is_declaration_type(v.toks[i].text) || !v.statement_start(i)) return std::nullopt;
  std::size_t last_prefix = i;
  std::size_t k = i;
  while (k < limit && v.ident(k) && is_declaration_type(v.toks[k].text)) {
    last_prefix = k;
    k = v.next_sig(k + 1);
  }
  if (!(v.ident(k) || v.op(k, "*") || v.op(k, "&"))) return std::nullopt;
  auto semi = statement_end(v, k, limit);
  if (semi == npos || v.has_comment(i, semi)) return std::nullopt;
  auto parts = split_top_level(v, k, semi, ",");
  if (parts.size() < 2) return std::nullopt;
  for (auto [b, e] : parts) {
    auto first = v.next_sig(b);
    if (first >= e) return std::nullopt;
    if (!(v.ident(first) || v.op(first, "*") || v.op(first, "&"))) return std::nullopt;
  }
  std::string prefix = v.text(i, last_prefix + 1);
  std::string text;
  for (auto [b, e] : parts) {
    if (!text.empty()) text += " ";
    text += prefix + " " + v.trimmed(b, e) + ";";
  }
  out += text;
  return semi + 1;
}

std::optional<std::size_t> py_split(const SourceView& v, const std::vector<PyLine>& lines, std::size_t i,
                                    std::string& out) {
  if (!line_start(lines, i)) return std::nullopt;
  const auto& line = lines[python_line_of(lines, i)];
  if (v.has_comment(line.begin, line.end)) return std::nullopt;
  auto sig = v.sig_range(line.begin, line.end);
  std::size_t eq = npos;
  for (std::size_t n = 0; n < sig.size(); ++n) {
    if (is_assignment_op(v.toks[sig[n]])) {
      if (eq != npos || !v.op(sig[n], "=")) return std::nullopt;
      eq = n;
    }
  }
  if (eq == npos || eq + 1 >= sig.size()) return std::nullopt;
  std::vector<std::string> targets;
  for (std::size_t n = 0; n < eq; ++n) {
    bool want_ident = n % 2 == 0;
    if (want_ident ? !(v.ident(sig[n]) && !is_keyword(v.toks[sig[n]].text)) : !v.op(sig[n], ",")) {
      return std::nullopt;
    }
    if (want_ident) targets.push_back(v.toks[sig[n]].text);
  }
  if (eq % 2 == 0 || targets.size() < 2) return std::nullopt;
  std::set<std::string> unique(targets.begin(), targets.end());
  if (unique.size() != targets.size()) return std::nullopt;
  auto values = split_top_level(v, sig[eq] + 1, line.end, ",");
  if (values.size() != targets.size()) return std::nullopt;
  for (std::size_t n = eq + 1; n < sig.size(); ++n) {
    const auto& t = v.toks[sig[n]];
    if (t.is_op("(") || t.is_op(";") || t.is_word("yield") || t.is_word("lambda")) return std::nullopt;
    if (t.kind == TokenKind::identifier && unique.contains(t.text)) return std::nullopt;
  }
  std::string text;
  for (std::size_t n = 0; n < targets.size(); ++n) {
    auto value = v.trimmed(values[n].first, values[n].second);
    if (value.empty()) return std::nullopt;
    if (n > 0) text += "\n" + line.indent;
    text += targets[n] + " = " + value;
  }
  out += text;
  return line.end;
}

}  // namespace

std::string optimize_cond(const SourceView& v) {
  if (is_python(v)) {
    auto lines = python_lines(v);
    Rewriter rw(v, [&](Rewriter& r, std::size_t i, std::size_t, std::string& out) {
      return py_optimize(r, lines, i, out);
    });
    return rw.render_all();
  }
  Rewriter rw(v, c_optimize);
  return rw.render_all();
}

std::string reorder_decl(const SourceView& v) {
  if (is_python(v)) {
    auto lines = python_lines(v);
    Rewriter rw(v, [&](Rewriter& r, std::size_t i, std::size_t, std::string& out) {
      return py_reorder(r.view, lines, i, out);
    });
    return rw.render_all();
  }
  Rewriter rw(v, c_reorder);
  return rw.render_all();
}

std::string swap_params(const SourceView& v) {
  Rewriter rw(v, swap_site);
  return rw.render_all();
}

std::string format_spacing(const SourceView& v) {
  return pad(
      v, [&](std::size_t i) { return is_assignment_op(v.toks[i]); },
      [&](std::size_t i) { return is_assignment_op(v.toks[i]) || v.op(i, ","); });
}

std::string adjust_op_space(const SourceView& v) {
  return pad(
      v, [&](std::size_t i) { return binary_op(v, i); }, [&](std::size_t i) { return binary_op(v, i); });
}

std::string add_braces(const SourceView& v) {
  if (is_python(v)) return v.text(0, v.size());
  Rewriter rw(v, brace_site);
  return rw.render_all();
}

std::string reorder_cond(const SourceView& v) {
  if (is_python(v)) {
    auto lines = python_lines(v);
    Rewriter rw(v, [&](Rewriter& r, std::size_t i, std::size_t, std::string& out) -> std::optional<std::size_t> {
      const auto& view = r.view;
      if (!(view.word(i, "if") || view.word(i, "elif") || view.word(i, "while")) || !line_start(lines, i)) {
        return std::nullopt;
      }
      const auto& line = lines[python_line_of(lines, i)];
      auto sig = view.sig_range(line.begin, line.end);
      if (sig.size() < 4 || !view.op(sig.back(), ":")) return std::nullopt;
      std::string swapped;
      if (!swap_operands(view, i + 1, sig.back(), swapped)) return std::nullopt;
      out += view.toks[i].text + swapped;
      return sig.back();
    });
    return rw.render_all();
  }
  Rewriter rw(v, [](Rewriter& r, std::size_t i, std::size_t, std::string& out) -> std::optional<std::size_t> {
    const auto& view = r.view;
    if (!(view.word(i, "if") || view.word(i, "while"))) return std::nullopt;
    auto lp = view.next_sig(i + 1);
    if (!view.op(lp, "(") || view.match[lp] == npos) return std::nullopt;
    auto rp = view.match[lp];
    std::string swapped;
    if (!swap_operands(view, lp + 1, rp, swapped)) return std::nullopt;
    out += view.text(i, lp + 1) + swapped;
    return rp;
  });
  return rw.render_all();
}

std::string insert_blank_line(const SourceView& v) {
  std::size_t target = npos;
  if (is_python(v)) {
    auto lines = python_lines(v);
    for (const auto& line : lines) {
      if (line.comment_only) continue;
      auto sig = v.sig_range(line.begin, line.end);
      if (v.op(sig.back(), ":") || v.op(sig.front(), "@")) continue;
      target = line.end;
      break;
    }
  } else {
    int depth = 0;
    std::size_t semi = npos;
    for (std::size_t i = 0; i < v.size() && semi == npos; ++i) {
      if (v.op(i, "(")) ++depth;
      if (v.op(i, ")")) --depth;
      if (depth == 0 && v.op(i, ";")) semi = i;
    }
    if (semi != npos) {
      for (std::size_t i = semi + 1; i < v.size(); ++i) {
        if (v.toks[i].kind == TokenKind::whitespace && v.toks[i].has_newline()) {
          target = i;
          break;
        }
        if (v.toks[i].kind == TokenKind::comment && v.toks[i].has_newline()) break;
      }
    }
  }
  if (target == npos || target >= v.size() || v.toks[target].kind != TokenKind::whitespace ||
      !v.toks[target].has_newline() || v.next_sig(target) >= v.size()) {
    return v.text(0, v.size());
  }
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i == target) {
      const auto& ws = v.toks[i].text;
      auto nl = ws.find('\n');
      out += ws.substr(0, nl) + "\n" + ws.substr(nl);
    } else {
      out += v.toks[i].text;
    }
  }
  return out;
}

std::string inline_temp_var(const SourceView& v) {
  if (is_python(v)) {
    auto lines = python_lines(v);
    Rewriter rw(v, [&](Rewriter& r, std::size_t i, std::size_t, std::string& out) {
      return py_inline(r.view, lines, i, out);
    });
    return rw.render_all();
  }
  auto type = return_type_of(v);
  Rewriter rw(v, [&](Rewriter& r, std::size_t i, std::size_t limit, std::string& out) {
    return c_inline(r, i, limit, out, type);
  });
  return rw.render_all();
}

std::string split_decl(const SourceView& v) {
  if (is_python(v)) {
    auto lines = python_lines(v);
    Rewriter rw(v, [&](Rewriter& r, std::size_t i, std::size_t, std::string& out) {
      return py_split(r.view, lines, i, out);
    });
    return rw.render_all();
  }
  Rewriter rw(v, c_split);
  return rw.render_all();
}

}  // namespace codemark::engine
