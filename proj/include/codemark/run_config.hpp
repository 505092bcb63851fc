#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "codemark/evaluator.hpp"
#include "codemark/extractor.hpp"
#include "codemark/features.hpp"
#include "codemark/llm_gateway.hpp"

namespace codemark {

/// Everything a run depends on besides the corpus. Serialized as JSON; see
/// README for the schema.
struct RunConfig {
  /// "mock" or "remote".
  std::string backend = "mock";
  ProviderConfig provider;
  SimilarityWeights weights;
  std::size_t n = 4;
  std::uint64_t seed = 42;
  DecodingPolicy policy;
  /// Test suite file; relative paths resolve against the config file.
  std::optional<std::filesystem::path> tests;
  /// Use the test suite inside verify_semantics while embedding.
  bool verify_with_tests = false;
  /// External syntax validators per language ({file} template).
  std::map<Language, std::string> validators;
  std::size_t jobs = 1;

  void validate() const;
  std::string to_json() const;
  static RunConfig from_json(std::string_view text, const std::filesystem::path& base = {});
  static RunConfig load(const std::filesystem::path& path);

  std::shared_ptr<const TestSuite> load_tests() const;
  /// Mock or remote backend; remote reads its key from the environment.
  Backend make_backend() const;
};

}  // namespace codemark
