#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "codemark/bits.hpp"
#include "codemark/corpus.hpp"
#include "codemark/embedder.hpp"
#include "codemark/features.hpp"
#include "codemark/llm_gateway.hpp"

namespace codemark {

struct DecodingPolicy {
  /// A bit decodes as 1 only when the candidate improves sim_sem by more
  /// than this.
  double margin = 0.0;

  void validate() const;
};

/// Retrieval scores below this are flagged as low confidence.
inline constexpr double kLowConfidence = 0.5;

struct RetrievalResult {
  CodeSnippet match;
  double score = 0;
  SimilarityBreakdown breakdown;
  /// Best score among the other candidates; equals `score` when alone.
  double runner_up_score = 0;
  bool low_confidence = false;
};

/// Candidate codebase with cached feature profiles.
class CodebaseIndex {
 public:
  /// Throws InvalidArgument on an empty codebase.
  explicit CodebaseIndex(const CandidateCodebase& codebase);

  std::span<const CodeSnippet> snippets() const { return codebase_.snippets(); }
  const FeatureProfile& profile(std::size_t i) const { return profiles_[i]; }
  const CandidateCodebase& codebase() const { return codebase_; }

 private:
  CandidateCodebase codebase_;
  std::vector<FeatureProfile> profiles_;
};

/// argmax of the combined score; ties go to the smallest id.
RetrievalResult retrieve(const CodeSnippet& c1, const CodebaseIndex& index, const SimilarityWeights& weights);

/// Same procedure as plan() applied to the retrieved original.
EmbeddingPlan reconstruct_plan(const Backend& backend, const CodeSnippet& c_hat, std::size_t n);

struct BitEvidence {
  std::size_t bit = 0;
  /// Empty when no rule was usable for the bit.
  std::string rule_id;
  double sim_before = 0;
  double sim_after = 0;
  /// "sem", "struct", "layout", "tie" or "none".
  std::string decided_by;
  bool decision = false;
};

struct ExtractionResult {
  WatermarkBits bits = WatermarkBits::zeros(1);
  std::vector<BitEvidence> evidence;
  RetrievalResult retrieval;
};

/// Replays the plan on a running reconstruction of c_hat. Each bit's rule
/// is chosen exactly as the embedder chose it; the bit is 1 iff the rewrite
/// moves the reconstruction closer to c1.
ExtractionResult decode(const Backend& backend, const CodeSnippet& c1, const CodeSnippet& c_hat,
                        const EmbeddingPlan& plan, const DecodingPolicy& policy = {});

ExtractionResult extract(const Backend& backend, const CodeSnippet& c1, const CodebaseIndex& index,
                         const SimilarityWeights& weights, std::size_t n, const DecodingPolicy& policy = {});

/// {bits, score, match_id, low_confidence, evidence: [...]}
std::string extraction_to_json(const ExtractionResult& result, const std::string& snippet_id = "");

struct ExtractionLine {
  std::string snippet_id;
  WatermarkBits bits = WatermarkBits::zeros(1);
  std::string match_id;
  double score = 0;
};

/// Reads the id, bits, match and score of each line of a results file.
std::vector<ExtractionLine> extraction_lines_from_jsonl(std::string_view content);

}  // namespace codemark
