#pragma once

#include <set>
#include <span>
#include <string>

#include "codemark/tokenizer.hpp"

namespace codemark {

/// Identifier roles in one snippet, shared by feature extraction, the naming
/// rules and the renaming attack.
struct IdentifierAnalysis {
  /// First non-keyword identifier directly before a top-level '('.
  std::string fn_name;
  /// V(c): identifiers that may be renamed consistently. Excludes reserved
  /// words, the function name, members (after `.`, `->`, `::`), qualifiers
  /// (before `::`), callees, keyword-argument and object-literal keys, and
  /// any word mentioned inside an interpolated literal.
  std::set<std::string> variables;
  /// Whether the function name itself can be renamed consistently.
  bool fn_name_renamable = false;
  /// Every identifier spelling present, for collision checks.
  std::set<std::string> all;
};

IdentifierAnalysis analyze_identifiers(std::span<const Token> tokens);

}  // namespace codemark
