#pragma once

// Token-level helpers shared by the deterministic rule transformers.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "codemark/language.hpp"
#include "codemark/tokenizer.hpp"

namespace codemark::engine {

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

struct SourceView {
  SourceView(std::string_view text, Language lang);

  Language lang;
  std::vector<Token> toks;
  /// Index of the matching bracket for ( [ { and their closers, else npos.
  std::vector<std::size_t> match;
  /// Token starts a line whose first character is '#'.
  std::vector<bool> preprocessor;

  std::size_t size() const { return toks.size(); }
  /// First significant token at or after i (size() if none).
  std::size_t next_sig(std::size_t i) const;
  /// Last significant token before i (npos if none).
  std::size_t prev_sig(std::size_t i) const;
  bool op(std::size_t i, std::string_view s) const { return i < toks.size() && toks[i].is_op(s); }
  bool word(std::size_t i, std::string_view s) const {
    return i < toks.size() && toks[i].is_word(s);
  }
  bool ident(std::size_t i) const {
    return i < toks.size() && toks[i].kind == TokenKind::identifier;
  }
  std::string text(std::size_t begin, std::size_t end) const;
  /// Text of [begin, end) with leading and trailing whitespace tokens dropped.
  std::string trimmed(std::size_t begin, std::size_t end) const;
  /// Leading whitespace of the source line holding token i.
  std::string indent_of(std::size_t i) const;
  /// Previous significant token is absent, ';', '{' or '}'.
  bool statement_start(std::size_t i) const;
  /// Significant token indices in [begin, end).
  std::vector<std::size_t> sig_range(std::size_t begin, std::size_t end) const;
  /// Count of identifier tokens spelled `name`.
  std::size_t count_word(std::string_view name) const;
  bool has_comment(std::size_t begin, std::size_t end) const;
};

/// Splits the significant tokens of [begin, end) at depth-0 separators.
std::vector<std::pair<std::size_t, std::size_t>> split_top_level(const SourceView& v,
                                                                 std::size_t begin,
                                                                 std::size_t end,
                                                                 std::string_view sep);

bool is_assignment_op(const Token& t);

/// Recursive renderer: the handler may claim a site starting at token i and
/// return the index after it; unclaimed tokens are copied verbatim.
class Rewriter {
 public:
  using Handler =
      std::function<std::optional<std::size_t>(Rewriter&, std::size_t, std::size_t, std::string&)>;

  Rewriter(const SourceView& view, Handler handler) : view(view), handler_(std::move(handler)) {}

  std::string render(std::size_t begin, std::size_t end);
  std::string render_all() { return render(0, view.size()); }

  const SourceView& view;

 private:
  Handler handler_;
};

/// One physical line of a Python snippet (continuations inside brackets are
/// folded into the logical line).
struct PyLine {
  std::size_t begin = 0;  // first non-whitespace token
  std::size_t end = 0;    // one past the last non-whitespace token
  std::string indent;
  bool comment_only = false;
};

std::vector<PyLine> python_lines(const SourceView& v);

/// Index of the last line of the block opened by line h (h itself when the
/// block is empty or inline).
std::size_t python_block_last(const std::vector<PyLine>& lines, std::size_t h);

/// Line index holding token i, or npos.
std::size_t python_line_of(const std::vector<PyLine>& lines, std::size_t token);

using Transformer = std::function<std::string(const SourceView&)>;

// Transformers keyed by rule id; missing ids have no offline engine.
const Transformer* find_transformer(std::string_view rule_id);

std::string camel_to_snake(const SourceView& v);
std::string snake_to_camel(const SourceView& v);
std::string to_pascal(const SourceView& v);
std::string to_uppercase(const SourceView& v);
std::string to_lowercase(const SourceView& v);
std::string add_suffix(const SourceView& v);

std::string for_to_while(const SourceView& v);
std::string while_to_do_while(const SourceView& v);

std::string optimize_cond(const SourceView& v);
std::string reorder_decl(const SourceView& v);
std::string swap_params(const SourceView& v);
std::string format_spacing(const SourceView& v);
std::string add_braces(const SourceView& v);
std::string reorder_cond(const SourceView& v);
std::string insert_blank_line(const SourceView& v);
std::string adjust_op_space(const SourceView& v);
std::string inline_temp_var(const SourceView& v);
std::string split_decl(const SourceView& v);

}  // namespace codemark::engine
