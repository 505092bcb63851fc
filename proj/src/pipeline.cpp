#include "codemark/pipeline.hpp"

#include "codemark/errors.hpp"

namespace codemark {

PipelineRun run_pipeline(const RunConfig& config, const Backend& backend, const CandidateCodebase& codebase,
                         const std::optional<AttackSpec>& attack, const TestSuite* tests) {
  config.validate();
  if (attack) attack->validate();
  CodebaseIndex index(codebase);
  PipelineRun run;
  auto source = BitSource::random(config.seed);
  run.outcomes = embed_batch(backend, codebase, source, config.n, config.jobs);

  std::vector<std::size_t> embedded;
  for (std::size_t i = 0; i < run.outcomes.size(); ++i) {
    if (run.outcomes[i].success) {
      embedded.push_back(i);
    } else {
      ++run.artifacts.embed_failures;
    }
  }
  run.artifacts.bits_per_snippet = config.n;

  auto originals = codebase.snippets();
  std::vector<std::optional<SnippetArtifact>> artifacts(embedded.size());
  std::vector<std::optional<ExtractionResult>> extractions(embedded.size());
  parallel_for(embedded.size(), config.jobs, [&](std::size_t j) {
    std::size_t i = embedded[j];
    const auto& outcome = run.outcomes[i];
    const auto& c1 = *outcome.watermarked;
    SnippetArtifact a;
    a.snippet_id = c1.id;
    a.embedded = outcome.record.bits;
    a.syntax_ok = syntax_check(c1, config.validators).ok;
    if (tests) a.test = run_tests(c1, *tests).outcome;

    CodeSnippet final = c1;
    if (attack) {
      auto spec = *attack;
      spec.seed += i;
      final = run_attack(spec, backend, c1).attacked;
    }
    a.similarity = sim_sem(extract_profile(originals[i]), extract_profile(final));
    try {
      auto result = extract(backend, final, index, config.weights, config.n, config.policy);
      a.extracted = result.bits;
      a.matched_id = result.retrieval.match.id;
      extractions[j] = std::move(result);
    } catch (const Error&) {
      a.extracted.reset();
    }
    artifacts[j] = std::move(a);
  });
  for (auto& a : artifacts) run.artifacts.snippets.push_back(std::move(*a));
  for (auto& e : extractions) {
    if (e) run.extractions.push_back(std::move(*e));
  }
  run.report = build_report(run.artifacts);
  return run;
}

}  // namespace codemark
