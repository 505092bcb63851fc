#include <cctype>
#include <map>
#include <set>

#include "codemark/identifiers.hpp"
#include "engine.hpp"

namespace codemark::engine {
namespace {

bool lower(char c) { return c >= 'a' && c <= 'z'; }
bool upper(char c) { return c >= 'A' && c <= 'Z'; }
bool digit(char c) { return c >= '0' && c <= '9'; }
char to_up(char c) { return lower(c) ? static_cast<char>(c - 'a' + 'A') : c; }
char to_low(char c) { return upper(c) ? static_cast<char>(c - 'A' + 'a') : c; }

using WordFn = std::string (*)(const std::string&);

// Applies fn to the identifier with leading/trailing underscores kept aside.
std::string with_affixes(const std::string& name, WordFn fn) {
  auto b = name.find_first_not_of('_');
  if (b == std::string::npos) return name;
  auto e = name.find_last_not_of('_') + 1;
  return name.substr(0, b) + fn(name.substr(b, e - b)) + name.substr(e);
}

std::vector<std::string> snake_segments(const std::string& core) {
  std::vector<std::string> segs;
  std::size_t start = 0;
  while (true) {
    auto p = core.find('_', start);
    segs.push_back(core.substr(start, p - start));
    if (p == std::string::npos) break;
    start = p + 1;
  }
  return segs;
}

bool segments_ok(const std::vector<std::string>& segs) {
  for (const auto& s : segs) {
    if (s.empty() || !(lower(s[0]) || upper(s[0]))) return false;
  }
  return true;
}

std::string camel_word(const std::string& core) {
  if (!lower(core[0]) || core.find('_') != std::string::npos) return core;
  bool has_upper = false;
  for (char c : core) has_upper |= upper(c);
  if (!has_upper) return core;
  std::string out;
  for (std::size_t i = 0; i < core.size(); ++i) {
    char c = core[i];
    if (upper(c)) {
      char prev = core[i - 1];
      bool next_lower = i + 1 < core.size() && lower(core[i + 1]);
      if (lower(prev) || digit(prev) || (upper(prev) && next_lower)) out += '_';
      out += to_low(c);
    } else {
      out += c;
    }
  }
  return out;
}

std::string snake_word(const std::string& core) {
  if (core.find('_') == std::string::npos) return core;
  for (char c : core) {
    if (upper(c)) return core;
  }
  auto segs = snake_segments(core);
  if (!segments_ok(segs)) return core;
  std::string out = segs[0];
  for (std::size_t i = 1; i < segs.size(); ++i) {
    out += to_up(segs[i][0]);
    out += segs[i].substr(1);
  }
  return out;
}

std::string pascal_word(const std::string& core) {
  if (!lower(core[0])) return core;
  auto segs = snake_segments(core);
  if (segs.size() > 1 && segments_ok(segs)) {
    std::string out;
    for (const auto& s : segs) {
      out += to_up(s[0]);
      out += s.substr(1);
    }
    return out;
  }
  std::string out = core;
  out[0] = to_up(out[0]);
  return out;
}

std::string upper_word(const std::string& core) {
  std::string out = core;
  for (auto& c : out) c = to_up(c);
  return out;
}

std::string lower_word(const std::string& core) {
  std::string out = core;
  for (auto& c : out) c = to_low(c);
  return out;
}

std::string suffix_word(const std::string& core) { return core + "Val"; }

std::string rename_all(const SourceView& v, WordFn fn) {
  auto ids = analyze_identifiers(v.toks);
  std::set<std::string> targets = ids.variables;
  if (ids.fn_name_renamable) targets.insert(ids.fn_name);

  std::map<std::string, std::string> mapping;
  std::set<std::string> taken;
  for (const auto& name : targets) {
    auto renamed = with_affixes(name, fn);
    if (renamed == name || is_reserved(renamed) || ids.all.contains(renamed) ||
        taken.contains(renamed)) {
      continue;
    }
    taken.insert(renamed);
    mapping.emplace(name, std::move(renamed));
  }

  std::string out;
  for (const auto& t : v.toks) {
    if (t.kind == TokenKind::identifier) {
      if (auto it = mapping.find(t.text); it != mapping.end()) {
        out += it->second;
        continue;
      }
    }
    out += t.text;
  }
  return out;
}

}  // namespace

std::string camel_to_snake(const SourceView& v) { return rename_all(v, camel_word); }
std::string snake_to_camel(const SourceView& v) { return rename_all(v, snake_word); }
std::string to_pascal(const SourceView& v) { return rename_all(v, pascal_word); }
std::string to_uppercase(const SourceView& v) { return rename_all(v, upper_word); }
std::string to_lowercase(const SourceView& v) { return rename_all(v, lower_word); }
std::string add_suffix(const SourceView& v) { return rename_all(v, suffix_word); }

}  // namespace codemark::engine
