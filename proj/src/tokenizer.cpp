#include "codemark/tokenizer.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace codemark {
namespace {

bool ident_start(unsigned char c) {
  return std::isalpha(c) || c == '_' || c == '$' || c >= 0x80;
}
bool ident_char(unsigned char c) {
  return std::isalnum(c) || c == '_' || c == '$' || c >= 0x80;
}
bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

// Longest match first.
constexpr std::array<std::string_view, 36> kOperators = {
    ">>>=", "<<=", ">>=", ">>>", "===", "!==", "**=", "//=", "...", "?\?=",
    "->",   "::",  "++",  "--",  "&&",  "||",  "==",  "!=",  "<=",  ">=",
    "+=",   "-=",  "*=",  "/=",  "%=",  "&=",  "|=",  "^=",  "<<",  ">>",
    "**",   "=>",  ":=",  "?.",  "??",  "//"};

bool is_python_string_prefix(std::string_view word) {
  if (word.size() > 2) return false;
  for (char c : word) {
    char l = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (l != 'r' && l != 'b' && l != 'u' && l != 'f') return false;
  }
  return true;
}

bool is_c_string_prefix(std::string_view word) {
  return word == "L" || word == "u" || word == "U" || word == "u8" || word == "R" ||
         word == "LR" || word == "uR" || word == "UR" || word == "u8R";
}

class Scanner {
 public:
  Scanner(std::string_view src, Language lang) : src_(src), lang_(lang) {}

  std::vector<Token> run() {
    while (pos_ < src_.size()) step();
    return std::move(out_);
  }

 private:
  char peek(size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  void emit(TokenKind kind, size_t begin, bool unterminated = false, bool interp = false) {
    out_.push_back(Token{kind, std::string(src_.substr(begin, pos_ - begin)), unterminated,
                         interp});
  }

  const Token* last_significant() const {
    for (auto it = out_.rbegin(); it != out_.rend(); ++it) {
      if (it->significant()) return &*it;
    }
    return nullptr;
  }

  bool python() const { return lang_ == Language::python; }

  void step() {
    const size_t begin = pos_;
    const char c = peek();

    if (is_space(c)) {
      while (pos_ < src_.size() && is_space(src_[pos_])) ++pos_;
      emit(TokenKind::whitespace, begin);
      return;
    }
    if (python() && c == '#') {
      while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      emit(TokenKind::comment, begin);
      return;
    }
    if (!python() && c == '/' && peek(1) == '/') {
      while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      emit(TokenKind::comment, begin);
      return;
    }
    if (!python() && c == '/' && peek(1) == '*') {
      auto end = src_.find("*/", pos_ + 2);
      bool open = end == std::string_view::npos;
      pos_ = open ? src_.size() : end + 2;
      emit(TokenKind::comment, begin, open);
      return;
    }
    if (c == '"' || c == '\'') {
      scan_quoted(begin, false);
      return;
    }
    if (c == '`' && lang_ != Language::python) {
      scan_template(begin);
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
      scan_number(begin);
      return;
    }
    if (ident_start(static_cast<unsigned char>(c))) {
      while (pos_ < src_.size() && ident_char(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      std::string_view word = src_.substr(begin, pos_ - begin);
      char q = peek();
      if (q == '"' || q == '\'') {
        if (python() && is_python_string_prefix(word)) {
          bool fstr = word.find_first_of("fF") != std::string_view::npos;
          scan_quoted(begin, fstr);
          return;
        }
        if (!python() && is_c_string_prefix(word)) {
          if (word.back() == 'R' && q == '"') {
            scan_raw_string(begin);
          } else {
            scan_quoted(begin, false);
          }
          return;
        }
      }
      emit(TokenKind::identifier, begin);
      return;
    }
    if (c == '/' && lang_ == Language::javascript && regex_allowed() && scan_regex(begin)) {
      return;
    }
    for (auto op : kOperators) {
      if (op == "//" && !python()) continue;
      if (src_.substr(pos_, op.size()) == op) {
        pos_ += op.size();
        emit(TokenKind::op, begin);
        return;
      }
    }
    ++pos_;
    emit(TokenKind::op, begin);
  }

  void scan_number(size_t begin) {
    bool hex = peek() == '0' && (peek(1) == 'x' || peek(1) == 'X');
    while (pos_ < src_.size()) {
      char ch = src_[pos_];
      if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '.') {
        if (ch == '.' && peek(1) == '.') break;
        ++pos_;
        continue;
      }
      if ((ch == '+' || ch == '-') && !hex && pos_ > begin &&
          (src_[pos_ - 1] == 'e' || src_[pos_ - 1] == 'E')) {
        ++pos_;
        continue;
      }
      break;
    }
    emit(TokenKind::number, begin);
  }

  // pos_ may sit on a prefix; the quote is found from the current position.
  void scan_quoted(size_t begin, bool fstring) {
    while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\'') ++pos_;
    const char q = src_[pos_];
    const bool triple = python() && peek(1) == q && peek(2) == q;
    pos_ += triple ? 3 : 1;
    bool closed = false;
    bool interp = false;
    while (pos_ < src_.size()) {
      char ch = src_[pos_];
      if (ch == '\\') {
        pos_ += 2;
        continue;
      }
      if (fstring && ch == '{') {
        if (peek(1) == '{') {
          pos_ += 2;
          continue;
        }
        interp = true;
      }
      if (triple) {
        if (ch == q && peek(1) == q && peek(2) == q) {
          pos_ += 3;
          closed = true;
          break;
        }
      } else {
        if (ch == '\n') break;
        if (ch == q) {
          ++pos_;
          closed = true;
          break;
        }
      }
      ++pos_;
    }
    pos_ = std::min(pos_, src_.size());
    emit(TokenKind::literal, begin, !closed, interp);
  }

  void scan_raw_string(size_t begin) {
    ++pos_;  // opening quote
    auto paren = src_.find('(', pos_);
    if (paren == std::string_view::npos) {
      pos_ = src_.size();
      emit(TokenKind::literal, begin, true);
      return;
    }
    std::string closing = ")" + std::string(src_.substr(pos_, paren - pos_)) + "\"";
    auto end = src_.find(closing, paren + 1);
    bool open = end == std::string_view::npos;
    pos_ = open ? src_.size() : end + closing.size();
    emit(TokenKind::literal, begin, open);
  }

  void scan_template(size_t begin) {
    ++pos_;
    bool closed = false;
    bool interp = false;
    while (pos_ < src_.size()) {
      char ch = src_[pos_];
      if (ch == '\\') {
        pos_ += 2;
        continue;
      }
      if (ch == '`') {
        ++pos_;
        closed = true;
        break;
      }
      if (ch == '$' && peek(1) == '{') {
        interp = true;
        int depth = 0;
        while (pos_ < src_.size()) {
          if (src_[pos_] == '{') ++depth;
          if (src_[pos_] == '}' && --depth == 0) break;
          ++pos_;
        }
      }
      ++pos_;
    }
    pos_ = std::min(pos_, src_.size());
    emit(TokenKind::literal, begin, !closed, interp);
  }

  bool regex_allowed() const {
    const Token* prev = last_significant();
    if (!prev) return true;
    if (prev->kind == TokenKind::identifier) {
      static constexpr std::array<std::string_view, 11> kw = {
          "return", "typeof", "case", "do", "else", "in", "of", "new", "delete", "void", "throw"};
      return std::find(kw.begin(), kw.end(), prev->text) != kw.end();
    }
    if (prev->kind == TokenKind::number || prev->kind == TokenKind::literal) return false;
    return !(prev->text == ")" || prev->text == "]" || prev->text == "}" ||
             prev->text == "++" || prev->text == "--");
  }

  bool scan_regex(size_t begin) {
    size_t p = pos_ + 1;
    if (p < src_.size() && (src_[p] == '/' || src_[p] == '*')) return false;
    bool in_class = false;
    while (p < src_.size()) {
      char ch = src_[p];
      if (ch == '\n') return false;
      if (ch == '\\') {
        p += 2;
        continue;
      }
      if (ch == '[') in_class = true;
      if (ch == ']') in_class = false;
      if (ch == '/' && !in_class) break;
      ++p;
    }
    if (p >= src_.size()) return false;
    ++p;
    while (p < src_.size() && std::isalpha(static_cast<unsigned char>(src_[p]))) ++p;
    pos_ = p;
    emit(TokenKind::literal, begin);
    return true;
  }

  std::string_view src_;
  Language lang_;
  size_t pos_ = 0;
  std::vector<Token> out_;
};

}  // namespace

std::vector<Token> tokenize(std::string_view source, Language lang) {
  return Scanner(source, lang).run();
}

std::string join_tokens(std::span<const Token> tokens) {
  std::string out;
  for (const auto& t : tokens) out += t.text;
  return out;
}

}  // namespace codemark
