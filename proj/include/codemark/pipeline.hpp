#pragma once

#include <optional>
#include <vector>

#include "codemark/attacks.hpp"
#include "codemark/embedder.hpp"
#include "codemark/evaluator.hpp"
#include "codemark/extractor.hpp"
#include "codemark/run_config.hpp"

namespace codemark {

struct PipelineRun {
  std::vector<EmbeddingOutcome> outcomes;
  /// One per successful embedding, in codebase order.
  std::vector<ExtractionResult> extractions;
  RunArtifacts artifacts;
  MetricReport report;
};

/// embed -> optional attack -> extract -> report over a whole codebase.
/// Each snippet is attacked with seed `attack.seed + index`. With a test
/// suite, the watermarked code (before any attack) is run against it.
PipelineRun run_pipeline(const RunConfig& config, const Backend& backend, const CandidateCodebase& codebase,
                         const std::optional<AttackSpec>& attack = std::nullopt,
                         const TestSuite* tests = nullptr);

}  // namespace codemark
