#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "codemark/language.hpp"

namespace codemark {

enum class TokenKind { identifier, number, op, literal, comment, whitespace };

/// One lexeme. Concatenating the texts of a token stream reproduces the
/// source byte-for-byte.
struct Token {
  TokenKind kind;
  std::string text;
  /// Literal or block comment that ran into end of line/input.
  bool unterminated = false;
  /// f-string or template literal carrying embedded expressions.
  bool interpolated = false;

  bool significant() const {
    return kind != TokenKind::whitespace && kind != TokenKind::comment;
  }
  bool is_op(std::string_view s) const { return kind == TokenKind::op && text == s; }
  bool is_word(std::string_view s) const {
    return kind == TokenKind::identifier && text == s;
  }
  bool has_newline() const { return text.find('\n') != std::string::npos; }
};

/// Language-agnostic scanner for C-family, Java, JavaScript and Python
/// surface syntax. Never throws: malformed input yields tokens flagged
/// `unterminated`.
std::vector<Token> tokenize(std::string_view source, Language lang);

std::string join_tokens(std::span<const Token> tokens);

/// Keywords of any supported language.
bool is_keyword(std::string_view word);

/// Keywords plus standard-library and builtin names that are never renamed.
bool is_reserved(std::string_view word);

/// Words that open a declaration statement (`int`, `let`, `auto`, ...).
bool is_declaration_type(std::string_view word);

}  // namespace codemark
