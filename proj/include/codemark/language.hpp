#pragma once

#include <string_view>

namespace codemark {

enum class Language { c, cpp, java, javascript, python, unknown };

std::string_view to_string(Language lang);

/// Parses a language tag; throws InvalidArgument on an unknown tag.
Language parse_language(std::string_view tag);

/// Maps a file extension (with or without the leading dot) to a language.
Language language_from_extension(std::string_view ext);

/// Python uses indentation blocks; everything else is treated as brace syntax.
inline bool is_brace_language(Language lang) { return lang != Language::python; }

}  // namespace codemark
