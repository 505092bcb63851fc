#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "codemark/corpus.hpp"

namespace codemark {

/// Ordered structural vocabulary counted by f_s.
inline constexpr std::array<std::string_view, 29> kStructuralVocabulary = {
    "for", "while", "do", "if", "else",  "switch", "case", "return", "break", "continue",
    "try", "catch", "def", "function", "{", "}", "(", ")", "[", "]",
    ";", "=", "==", "<", ">", "+", "-", "*", "/"};

using StructVector = std::array<std::uint32_t, kStructuralVocabulary.size()>;

/// The four retrieval features of one snippet.
struct FeatureProfile {
  std::string fn_name;
  std::set<std::string> var_set;
  StructVector struct_vec{};
  std::string norm_text;
};

FeatureProfile extract_profile(const CodeSnippet& snippet);
FeatureProfile extract_profile(std::string_view text, Language lang);

/// Unit-cost character (code point) edit distance.
std::size_t lev_dist(std::string_view a, std::string_view b);

/// 1 - lev/max(|a|,|b|); 1 when both are empty.
double normalized_edit_similarity(std::string_view a, std::string_view b);

double sim_name(const FeatureProfile& p, const FeatureProfile& q);
double sim_vars(const FeatureProfile& p, const FeatureProfile& q);
double sim_struct(const FeatureProfile& p, const FeatureProfile& q);
double sim_sem(const FeatureProfile& p, const FeatureProfile& q);

double jaccard(const std::set<std::string>& a, const std::set<std::string>& b);
double cosine(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b);

struct SimilarityWeights {
  double alpha = 0.25;
  double beta = 0.25;
  double gamma = 0.25;
  double delta = 0.25;

  /// Throws InvalidArgument unless every weight is in [0,1] and they sum to 1.
  void validate() const;
  bool operator==(const SimilarityWeights&) const = default;
};

SimilarityWeights load_weights(const std::filesystem::path& path);
void save_weights(const SimilarityWeights& w, const std::filesystem::path& path);
std::string weights_to_json(const SimilarityWeights& w);

struct SimilarityBreakdown {
  double name = 0;
  double vars = 0;
  double structure = 0;
  double sem = 0;

  double combined(const SimilarityWeights& w) const {
    return w.alpha * name + w.beta * vars + w.gamma * structure + w.delta * sem;
  }
};

SimilarityBreakdown similarity_breakdown(const FeatureProfile& p, const FeatureProfile& q);
double combined_score(const FeatureProfile& p, const FeatureProfile& q, const SimilarityWeights& w);

/// Whether `candidate` is closer to `target` than `baseline` is. Edit
/// similarity on whitespace-free text decides; structural cosine breaks
/// exact ties, then whitespace-sensitive edit similarity (so layout-only
/// rewrites stay observable).
struct ClosenessTest {
  double sem_before = 0;
  double sem_after = 0;
  double struct_before = 0;
  double struct_after = 0;
  double layout_before = 0;
  double layout_after = 0;
  /// Which signal decided: "sem", "struct", "layout" or "tie".
  std::string decided_by;
  bool closer = false;
};

ClosenessTest compare_closeness(std::string_view baseline, std::string_view candidate,
                                std::string_view target, Language lang, double margin = 0.0);

struct DevPair {
  CodeSnippet watermarked;
  std::string original_id;
};

struct GridSearchResult {
  SimilarityWeights weights;
  double accuracy = 0;
  double mean_margin = 0;
  std::size_t evaluated = 0;
};

/// Exhaustive search over the 0.1-step simplex grid (286 points). Objective:
/// top-1 retrieval accuracy, then mean margin of the true original over the
/// best competitor, then lexicographic order of (alpha, beta, gamma, delta).
GridSearchResult grid_search_weights(std::span<const DevPair> dev_pairs,
                                     const CandidateCodebase& codebase);

}  // namespace codemark
