#include "codemark/language.hpp"

#include <string>

#include "codemark/errors.hpp"

namespace codemark {

std::string_view to_string(Language lang) {
  switch (lang) {
    case Language::c: return "c";
    case Language::cpp: return "cpp";
    case Language::java: return "java";
    case Language::javascript: return "javascript";
    case Language::python: return "python";
    case Language::unknown: return "unknown";
  }
  return "unknown";
}

Language parse_language(std::string_view tag) {
  for (auto lang : {Language::c, Language::cpp, Language::java, Language::javascript,
                    Language::python, Language::unknown}) {
    if (tag == to_string(lang)) return lang;
  }
  throw InvalidArgument("unknown language tag '" + std::string(tag) + "'");
}

Language language_from_extension(std::string_view ext) {
  if (!ext.empty() && ext.front() == '.') ext.remove_prefix(1);
  if (ext == "c") return Language::c;
  if (ext == "cpp" || ext == "cc") return Language::cpp;
  if (ext == "java") return Language::java;
  if (ext == "js") return Language::javascript;
  if (ext == "py") return Language::python;
  return Language::unknown;
}

}  // namespace codemark
