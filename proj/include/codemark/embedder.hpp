#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "codemark/bits.hpp"
#include "codemark/corpus.hpp"
#include "codemark/llm_gateway.hpp"
#include "codemark/rules.hpp"

namespace codemark {

/// Candidate rules tried per bit before falling back to organization rules.
inline constexpr std::size_t kMaxCandidates = 5;

struct PlanEntry {
  /// 1-based bit index.
  std::size_t bit = 0;
  Category category = Category::naming;
  /// Best-first applicable rules of `category` on the planned snippet.
  std::vector<const TransformationRule*> ranked;
  std::optional<std::string> chosen;
};

struct EmbeddingPlan {
  std::string snippet_id;
  std::vector<PlanEntry> per_bit;
};

/// Round-robin categories by bit index with each list ranked on `snippet`.
/// Throws InvalidArgument when n is 0.
EmbeddingPlan plan(const Backend& backend, const CodeSnippet& snippet, std::size_t n);

struct Candidate {
  const TransformationRule* rule = nullptr;
  std::string text;
  bool fallback = false;
};

/// The rule that bit `entry` uses on `current`: the first of at most
/// kMaxCandidates unclaimed ranked rules whose rewrite is confirmed and
/// passes verify_semantics, else the first unclaimed fallback rule that
/// does. Embedding and decoding share this choice; `claimed` holds the
/// rules of earlier bits.
std::optional<Candidate> select_candidate(const Backend& backend, const CodeSnippet& current,
                                          const PlanEntry& entry, const std::set<std::string>& claimed);

enum class BitStatus { applied, skipped, fallback, failed };

std::string_view to_string(BitStatus s);

struct BitOutcome {
  std::size_t bit = 0;
  BitStatus status = BitStatus::skipped;
  std::string rule_id;
  std::string reason;
};

struct EmbeddingOutcome {
  /// c_1; absent when any bit failed.
  std::optional<CodeSnippet> watermarked;
  WatermarkRecord record;
  std::vector<BitOutcome> per_bit_status;
  bool success = false;
  std::string error;

  /// Throws EmbeddingFailed for unsuccessful outcomes.
  const CodeSnippet& require() const;
};

/// Applies the plan bit by bit. A failed bit makes the outcome unsuccessful
/// instead of throwing; backend errors propagate with the bit index.
EmbeddingOutcome embed(const Backend& backend, const CodeSnippet& snippet, const WatermarkBits& bits,
                       const EmbeddingPlan& plan);
EmbeddingOutcome embed(const Backend& backend, const CodeSnippet& snippet, const WatermarkBits& bits);

/// Watermarks for a batch: uniform bits from a seeded generator or one
/// fixed bitstring for every snippet.
class BitSource {
 public:
  static BitSource random(std::uint64_t seed);
  static BitSource fixed(WatermarkBits bits);

  WatermarkBits next(std::size_t n);

 private:
  BitSource() = default;
  std::mt19937_64 rng_;
  std::optional<WatermarkBits> fixed_;
};

/// Embeds every snippet independently, up to `jobs` at a time. Per-snippet
/// errors become unsuccessful outcomes.
std::vector<EmbeddingOutcome> embed_batch(const Backend& backend, const CandidateCodebase& codebase,
                                          BitSource& bits, std::size_t n, std::size_t jobs = 1);

/// Replays the applied rules of a record on `original` with the rules engine.
std::string replay_record(const WatermarkRecord& record, const CodeSnippet& original);

/// Runs `fn(i)` for i in [0, count) on up to `jobs` threads.
void parallel_for(std::size_t count, std::size_t jobs, const std::function<void(std::size_t)>& fn);

}  // namespace codemark
