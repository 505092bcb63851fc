#include <string>
#include <string_view>
#include <unordered_set>

#include "codemark/tokenizer.hpp"

namespace codemark {
namespace {

using WordSet = std::unordered_set<std::string_view>;

const WordSet& keywords() {
  static const WordSet words = {
      // C / C++
      "auto", "break", "case", "char", "const", "continue", "default", "do", "double", "else",
      "enum", "extern", "float", "for", "goto", "if", "inline", "int", "long", "register",
      "restrict", "return", "short", "signed", "sizeof", "static", "struct", "switch",
      "typedef", "union", "unsigned", "void", "volatile", "while", "bool", "true", "false",
      "class", "namespace", "template", "typename", "public", "private", "protected",
      "virtual", "override", "final", "new", "delete", "this", "throw", "try", "catch",
      "operator", "using", "nullptr", "constexpr", "noexcept", "decltype", "explicit",
      "friend", "mutable", "static_cast", "dynamic_cast", "const_cast", "reinterpret_cast",
      "consteval", "constinit", "co_await", "co_return", "co_yield", "concept", "requires",
      "wchar_t", "char8_t", "char16_t", "char32_t", "alignas", "alignof", "thread_local",
      "static_assert", "export", "module", "import",
      // Java
      "abstract", "assert", "boolean", "byte", "extends", "implements", "instanceof",
      "interface", "native", "package", "strictfp", "super", "synchronized", "throws",
      "transient", "var", "null", "record", "yield", "sealed", "permits",
      // JavaScript
      "function", "let", "in", "of", "typeof", "undefined", "async", "await", "debugger",
      "with", "get", "set", "arguments", "finally",
      // Python
      "def", "elif", "pass", "lambda", "None", "True", "False", "and", "or", "not", "is",
      "from", "as", "global", "nonlocal", "raise", "except", "del", "match",
  };
  return words;
}

const WordSet& builtins() {
  static const WordSet words = {
      // C / C++ library
      "main", "printf", "scanf", "malloc", "calloc", "realloc", "free", "memcpy", "memset",
      "strlen", "strcmp", "strcpy", "strcat", "abs", "fabs", "sqrt", "pow", "exp", "log",
      "floor", "ceil", "round", "NULL", "EOF", "FILE", "stdin", "stdout", "stderr",
      "size_t", "ssize_t", "ptrdiff_t", "int8_t", "int16_t", "int32_t", "int64_t",
      "uint8_t", "uint16_t", "uint32_t", "uint64_t", "INT_MAX", "INT_MIN", "LONG_MAX",
      "LONG_MIN", "UINT_MAX", "DBL_MAX", "FLT_MAX", "CHAR_BIT", "std", "string", "vector",
      "map", "unordered_map", "unordered_set", "pair", "tuple", "array", "deque", "queue",
      "stack", "list", "cout", "cin", "cerr", "endl", "min", "max", "swap", "sort",
      "reverse", "begin", "end", "size", "isdigit", "isalpha", "isspace", "toupper",
      "tolower", "assert", "exit",
      // Java library
      "System", "Math", "String", "Integer", "Long", "Double", "Float", "Boolean",
      "Character", "Byte", "Short", "Object", "Arrays", "List", "ArrayList", "LinkedList",
      "Map", "HashMap", "TreeMap", "Set", "HashSet", "TreeSet", "StringBuilder",
      "Collections", "Iterator", "Exception", "RuntimeException", "Override",
      "IllegalArgumentException", "length", "out", "println",
      // JavaScript globals
      "console", "Array", "Number", "JSON", "Infinity", "NaN", "Promise", "Symbol",
      "BigInt", "Date", "RegExp", "Error", "TypeError", "globalThis", "window", "document",
      "process", "require", "module", "exports", "parseInt", "parseFloat", "isNaN",
      "isFinite",
      // Python builtins
      "self", "cls", "len", "range", "print", "sum", "sorted", "reversed", "dict",
      "tuple", "int", "float", "str", "bool", "enumerate", "zip", "filter", "any", "all",
      "isinstance", "type", "object", "iter", "next", "ord", "chr", "divmod", "input",
      "open", "bytes", "frozenset", "hash", "id", "repr", "format", "ValueError",
      "TypeError", "KeyError", "IndexError", "StopIteration", "__name__", "__main__",
      "__init__", "math",
  };
  return words;
}

const WordSet& declaration_types() {
  static const WordSet words = {
      "int", "long", "short", "char", "float", "double", "bool", "boolean", "byte",
      "unsigned", "signed", "auto", "const", "let", "var", "size_t", "String", "string",
      "std", "int64_t", "int32_t", "uint64_t", "uint32_t", "uint8_t", "static", "final",
      "Integer", "Long", "Double", "StringBuilder", "vector",
  };
  return words;
}

}  // namespace

bool is_keyword(std::string_view word) { return keywords().contains(word); }

bool is_reserved(std::string_view word) {
  return keywords().contains(word) || builtins().contains(word);
}

bool is_declaration_type(std::string_view word) { return declaration_types().contains(word); }

}  // namespace codemark
