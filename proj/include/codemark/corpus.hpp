#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "codemark/bits.hpp"
#include "codemark/language.hpp"

namespace codemark {

/// 64-bit FNV-1a over the UTF-8 bytes of `text`.
std::uint64_t content_hash(std::string_view text);
std::string hash_to_hex(std::uint64_t hash);
bool is_valid_utf8(std::string_view text);

/// One function-level source text.
struct CodeSnippet {
  std::string id;
  Language language = Language::unknown;
  std::string text;
  std::string origin = "synthetic";
  std::uint64_t content_hash = 0;

  /// Validates the text (non-empty, UTF-8) and computes the hash.
  static CodeSnippet make(std::string id, Language language, std::string text,
                          std::string origin = "synthetic");

  /// Same identity, new body.
  CodeSnippet with_text(std::string new_text) const;

  bool operator==(const CodeSnippet&) const = default;
};

/// The candidate originals searched during extraction. Immutable, sorted by
/// id, free of duplicate content.
class CandidateCodebase {
 public:
  CandidateCodebase() = default;

  /// Drops later snippets whose content hash was already seen, then sorts by
  /// id. Throws InvalidArgument on duplicate ids.
  explicit CandidateCodebase(std::vector<CodeSnippet> snippets);

  std::span<const CodeSnippet> snippets() const { return snippets_; }
  const CodeSnippet* find(std::string_view id) const;
  const CodeSnippet& at(std::string_view id) const;
  std::size_t size() const { return snippets_.size(); }
  bool empty() const { return snippets_.empty(); }

  std::size_t duplicates_dropped() const { return duplicates_dropped_; }
  std::size_t skipped_files() const { return skipped_files_; }
  void set_skipped_files(std::size_t n) { skipped_files_ = n; }

  bool operator==(const CandidateCodebase& other) const {
    return snippets_ == other.snippets_;
  }

 private:
  std::vector<CodeSnippet> snippets_;
  std::size_t duplicates_dropped_ = 0;
  std::size_t skipped_files_ = 0;
};

/// Reads every regular, non-hidden file below `root` as one snippet. Ids are
/// relative paths with '/' separators. Files that are empty or not UTF-8 are
/// counted in `skipped_files()`.
CandidateCodebase ingest_directory(const std::filesystem::path& root,
                                   const std::optional<std::set<Language>>& language_filter = {});

std::string codebase_to_jsonl(const CandidateCodebase& codebase);
CandidateCodebase codebase_from_jsonl(std::string_view content);
void save_codebase(const CandidateCodebase& codebase, const std::filesystem::path& path);
CandidateCodebase load_codebase(const std::filesystem::path& path);

struct RuleUse {
  std::size_t bit = 0;
  std::string rule_id;
  bool applied = false;

  bool operator==(const RuleUse&) const = default;
};

/// Audit trail of one embedding.
struct WatermarkRecord {
  std::string snippet_id;
  WatermarkBits bits;
  std::vector<RuleUse> per_bit_rules;
  std::string backend;
  std::string created_at;

  bool operator==(const WatermarkRecord&) const = default;
};

std::string records_to_jsonl(std::span<const WatermarkRecord> records);
std::vector<WatermarkRecord> records_from_jsonl(std::string_view content);
void save_records(std::span<const WatermarkRecord> records, const std::filesystem::path& path);
std::vector<WatermarkRecord> load_records(const std::filesystem::path& path);

}  // namespace codemark
