#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "codemark/corpus.hpp"
#include "codemark/llm_gateway.hpp"

namespace codemark {

enum class AttackKind { rename, transform, paraphrase };

std::string_view to_string(AttackKind kind);
AttackKind parse_attack_kind(std::string_view name);

struct AttackSpec {
  AttackKind kind = AttackKind::rename;
  /// Fraction of V(c) renamed, in (0, 1].
  double p = 0.5;
  /// Maximum number of rewrites, at least 1.
  std::size_t k = 1;
  std::uint64_t seed = 0;

  void validate() const;
  /// "V@50%", "T@3" or "paraphrase".
  std::string label() const;
};

struct AttackResult {
  CodeSnippet attacked;
  std::vector<std::string> applied_rules;
  std::vector<std::pair<std::string, std::string>> renamed;
  std::string warning;
};

/// Uniform integer in [0, n) by rejection sampling. n must be positive.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);

/// Renames ceil(p * |V|) identifiers of V(c), chosen uniformly with `seed`,
/// to fresh var_<i> names at every occurrence. Empty V leaves the snippet
/// unchanged with a warning.
AttackResult rename_attack(const CodeSnippet& snippet, double p, std::uint64_t seed);

/// Applies up to k distinct applicable deterministic rules drawn with `seed`.
AttackResult transform_attack(const CodeSnippet& snippet, std::size_t k, std::uint64_t seed);

/// One paraphrase round trip through a remote model. The mock backend throws
/// MockUnsupported.
AttackResult paraphrase_attack(const Backend& backend, const CodeSnippet& snippet);

AttackResult run_attack(const AttackSpec& spec, const Backend& backend, const CodeSnippet& snippet);

/// {kind, params, seed, applied_rules | renamed: [{from, to}]}
std::string attack_metadata_json(const AttackSpec& spec, const AttackResult& result);

}  // namespace codemark
