#include "codemark/corpus.hpp"

#include <algorithm>
#include <cstdio>
#include <nlohmann/json.hpp>
#include <unordered_set>

#include "codemark/errors.hpp"
#include "codemark/io.hpp"
#include "codemark/rules.hpp"

namespace codemark {

using nlohmann::json;
namespace fs = std::filesystem;

std::uint64_t content_hash(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hash_to_hex(std::uint64_t hash) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

namespace {

std::uint64_t hash_from_hex(std::string_view hex) {
  if (hex.size() != 16) throw FormatError("content_hash must be 16 hex digits");
  std::uint64_t v = 0;
  for (char c : hex) {
    v <<= 4;
    if (c >= '0' && c <= '9') v |= static_cast<std::uint64_t>(c - '0');
    else if (c >= 'a' && c <= 'f') v |= static_cast<std::uint64_t>(c - 'a' + 10);
    else throw FormatError("content_hash must be lowercase hex");
  }
  return v;
}

template <typename Fn>
void for_each_line(std::string_view content, Fn&& fn) {
  std::size_t line_no = 0;
  while (!content.empty()) {
    ++line_no;
    auto nl = content.find('\n');
    auto line = content.substr(0, nl);
    content = nl == std::string_view::npos ? std::string_view{} : content.substr(nl + 1);
    if (line.empty()) continue;
    try {
      fn(json::parse(line));
    } catch (const json::exception& e) {
      throw FormatError("line " + std::to_string(line_no) + ": parse failure (" + e.what() + ")");
    } catch (const Error& e) {
      throw FormatError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
}

}  // namespace

bool is_valid_utf8(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size()) {
    auto c = static_cast<unsigned char>(text[i]);
    std::size_t len = c < 0x80 ? 1 : (c >> 5) == 0x6 ? 2 : (c >> 4) == 0xE ? 3 : (c >> 3) == 0x1E ? 4 : 0;
    if (len == 0 || i + len > text.size()) return false;
    for (std::size_t k = 1; k < len; ++k) {
      if ((static_cast<unsigned char>(text[i + k]) >> 6) != 0x2) return false;
    }
    i += len;
  }
  return true;
}

CodeSnippet CodeSnippet::make(std::string id, Language language, std::string text,
                              std::string origin) {
  if (text.empty()) throw InvalidArgument("snippet '" + id + "' has empty text");
  if (!is_valid_utf8(text)) throw InvalidArgument("snippet '" + id + "' is not valid UTF-8");
  CodeSnippet s;
  s.id = std::move(id);
  s.language = language;
  s.content_hash = ::codemark::content_hash(text);
  s.text = std::move(text);
  s.origin = std::move(origin);
  return s;
}

CodeSnippet CodeSnippet::with_text(std::string new_text) const {
  return make(id, language, std::move(new_text), origin);
}

CandidateCodebase::CandidateCodebase(std::vector<CodeSnippet> snippets) {
  std::unordered_set<std::uint64_t> seen_hashes;
  std::unordered_set<std::string> seen_ids;
  for (auto& s : snippets) {
    if (!seen_hashes.insert(s.content_hash).second) {
      ++duplicates_dropped_;
      continue;
    }
    if (!seen_ids.insert(s.id).second) throw InvalidArgument("duplicate snippet id '" + s.id + "'");
    snippets_.push_back(std::move(s));
  }
  std::sort(snippets_.begin(), snippets_.end(),
            [](const CodeSnippet& a, const CodeSnippet& b) { return a.id < b.id; });
}

const CodeSnippet* CandidateCodebase::find(std::string_view id) const {
  auto it = std::lower_bound(snippets_.begin(), snippets_.end(), id,
                             [](const CodeSnippet& s, std::string_view key) { return s.id < key; });
  return it != snippets_.end() && it->id == id ? &*it : nullptr;
}

const CodeSnippet& CandidateCodebase::at(std::string_view id) const {
  if (const auto* s = find(id)) return *s;
  throw InvalidArgument("no snippet with id '" + std::string(id) + "'");
}

CandidateCodebase ingest_directory(const fs::path& root,
                                   const std::optional<std::set<Language>>& language_filter) {
  std::error_code ec;
  if (!fs::is_directory(root, ec)) throw IoError("not a readable directory: " + root.string());

  std::vector<fs::path> files;
  fs::recursive_directory_iterator it(root, fs::directory_options::none, ec);
  if (ec) throw IoError("cannot read " + root.string() + ": " + ec.message());
  for (; it != fs::recursive_directory_iterator(); it.increment(ec)) {
    if (ec) throw IoError("cannot traverse " + root.string() + ": " + ec.message());
    const auto& name = it->path().filename().string();
    if (!name.empty() && name.front() == '.') {
      if (it->is_directory()) it.disable_recursion_pending();
      continue;
    }
    if (it->is_regular_file()) files.push_back(it->path());
  }
  std::sort(files.begin(), files.end());

  std::vector<CodeSnippet> snippets;
  std::size_t skipped = 0;
  for (const auto& file : files) {
    Language lang = language_from_extension(file.extension().string());
    if (language_filter && !language_filter->contains(lang)) continue;
    std::string text;
    try {
      text = read_file(file);
    } catch (const IoError&) {
      ++skipped;
      continue;
    }
    if (text.empty() || !is_valid_utf8(text)) {
      ++skipped;
      continue;
    }
    auto id = fs::relative(file, root).generic_string();
    snippets.push_back(CodeSnippet::make(id, lang, std::move(text), file.string()));
  }
  CandidateCodebase cb(std::move(snippets));
  cb.set_skipped_files(skipped);
  return cb;
}

std::string codebase_to_jsonl(const CandidateCodebase& codebase) {
  std::string out;
  for (const auto& s : codebase.snippets()) {
    json j = {{"id", s.id},
              {"language", to_string(s.language)},
              {"text", s.text},
              {"origin", s.origin},
              {"content_hash", hash_to_hex(s.content_hash)}};
    out += j.dump();
    out += '\n';
  }
  return out;
}

CandidateCodebase codebase_from_jsonl(std::string_view content) {
  std::vector<CodeSnippet> snippets;
  for_each_line(content, [&](const json& j) {
    auto s = CodeSnippet::make(j.at("id").get<std::string>(),
                               parse_language(j.at("language").get<std::string>()),
                               j.at("text").get<std::string>(), j.at("origin").get<std::string>());
    if (s.content_hash != hash_from_hex(j.at("content_hash").get<std::string>())) {
      throw FormatError("content_hash does not match text of '" + s.id + "'");
    }
    snippets.push_back(std::move(s));
  });
  return CandidateCodebase(std::move(snippets));
}

void save_codebase(const CandidateCodebase& codebase, const fs::path& path) {
  write_file_atomic(path, codebase_to_jsonl(codebase));
}

CandidateCodebase load_codebase(const fs::path& path) { return codebase_from_jsonl(read_file(path)); }

std::string records_to_jsonl(std::span<const WatermarkRecord> records) {
  std::string out;
  for (const auto& r : records) {
    json rules = json::array();
    for (const auto& use : r.per_bit_rules) {
      rules.push_back({{"bit", use.bit}, {"rule_id", use.rule_id}, {"applied", use.applied}});
    }
    json j = {{"snippet_id", r.snippet_id},
              {"bits", r.bits.str()},
              {"per_bit_rules", rules},
              {"backend", r.backend},
              {"created_at", r.created_at}};
    out += j.dump();
    out += '\n';
  }
  return out;
}

std::vector<WatermarkRecord> records_from_jsonl(std::string_view content) {
  std::vector<WatermarkRecord> records;
  for_each_line(content, [&](const json& j) {
    WatermarkRecord r{j.at("snippet_id").get<std::string>(),
                      WatermarkBits::parse(j.at("bits").get<std::string>()),
                      {},
                      j.at("backend").get<std::string>(),
                      j.at("created_at").get<std::string>()};
    for (const auto& u : j.at("per_bit_rules")) {
      RuleUse use{u.at("bit").get<std::size_t>(), u.at("rule_id").get<std::string>(),
                  u.at("applied").get<bool>()};
      if (!catalog().find(use.rule_id)) throw FormatError("unknown rule id '" + use.rule_id + "'");
      r.per_bit_rules.push_back(std::move(use));
    }
    if (r.per_bit_rules.size() != r.bits.size()) {
      throw FormatError("per_bit_rules length does not match bit count");
    }
    records.push_back(std::move(r));
  });
  return records;
}

void save_records(std::span<const WatermarkRecord> records, const fs::path& path) {
  write_file_atomic(path, records_to_jsonl(records));
}

std::vector<WatermarkRecord> load_records(const fs::path& path) {
  return records_from_jsonl(read_file(path));
}

}  // namespace codemark
