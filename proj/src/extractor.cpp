#include "codemark/extractor.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

#include "codemark/errors.hpp"

namespace codemark {

using nlohmann::json;

void DecodingPolicy::validate() const {
  if (!(margin >= 0.0 && margin <= 1.0)) throw InvalidArgument("decoding margin must lie in [0, 1]");
}

CodebaseIndex::CodebaseIndex(const CandidateCodebase& codebase) : codebase_(codebase) {
  if (codebase_.empty()) throw InvalidArgument("candidate codebase is empty");
  profiles_.reserve(codebase_.size());
  for (const auto& s : codebase_.snippets()) profiles_.push_back(extract_profile(s));
}

RetrievalResult retrieve(const CodeSnippet& c1, const CodebaseIndex& index, const SimilarityWeights& weights) {
  weights.validate();
  auto query = extract_profile(c1);
  auto snippets = index.snippets();
  std::size_t best = 0;
  double best_score = -1, runner_up = -1;
  SimilarityBreakdown best_breakdown;
  for (std::size_t i = 0; i < snippets.size(); ++i) {
    auto b = similarity_breakdown(query, index.profile(i));
    double s = std::clamp(b.combined(weights), 0.0, 1.0);
    if (s > best_score) {
      runner_up = best_score;
      best_score = s;
      best = i;
      best_breakdown = b;
    } else {
      runner_up = std::max(runner_up, s);
    }
  }
  RetrievalResult r{snippets[best], best_score, best_breakdown, runner_up < 0 ? best_score : runner_up, false};
  r.low_confidence = r.score < kLowConfidence;
  return r;
}

EmbeddingPlan reconstruct_plan(const Backend& backend, const CodeSnippet& c_hat, std::size_t n) {
  return plan(backend, c_hat, n);
}

ExtractionResult decode(const Backend& backend, const CodeSnippet& c1, const CodeSnippet& c_hat,
                        const EmbeddingPlan& p, const DecodingPolicy& policy) {
  policy.validate();
  if (p.per_bit.empty()) throw InvalidArgument("decoding plan has no bits");
  ExtractionResult out;
  std::vector<std::uint8_t> bits;
  CodeSnippet r = c_hat;
  std::set<std::string> claimed;
  for (const auto& entry : p.per_bit) {
    BitEvidence ev;
    ev.bit = entry.bit;
    std::optional<Candidate> cand;
    try {
      cand = select_candidate(backend, r, entry, claimed);
    } catch (const NetworkError& e) {
      throw NetworkError("bit " + std::to_string(entry.bit) + ": " + e.what());
    } catch (const ParseError& e) {
      throw ParseError("bit " + std::to_string(entry.bit) + ": " + e.what());
    }
    if (!cand) {
      ev.decided_by = "none";
      bits.push_back(0);
      out.evidence.push_back(ev);
      continue;
    }
    claimed.insert(cand->rule->rule_id);
    ev.rule_id = cand->rule->rule_id;
    auto test = compare_closeness(r.text, cand->text, c1.text, c_hat.language, policy.margin);
    ev.sim_before = test.sem_before;
    ev.sim_after = test.sem_after;
    ev.decided_by = test.decided_by;
    ev.decision = test.closer;
    bits.push_back(test.closer ? 1 : 0);
    if (test.closer) r = r.with_text(std::move(cand->text));
    out.evidence.push_back(ev);
  }
  out.bits = WatermarkBits(std::move(bits));
  return out;
}

ExtractionResult extract(const Backend& backend, const CodeSnippet& c1, const CodebaseIndex& index,
                         const SimilarityWeights& weights, std::size_t n, const DecodingPolicy& policy) {
  auto retrieval = retrieve(c1, index, weights);
  auto p = reconstruct_plan(backend, retrieval.match, n);
  auto result = decode(backend, c1, retrieval.match, p, policy);
  result.retrieval = std::move(retrieval);
  return result;
}

std::string extraction_to_json(const ExtractionResult& result, const std::string& snippet_id) {
  json evidence = json::array();
  for (const auto& e : result.evidence) {
    evidence.push_back({{"bit", e.bit},
                        {"rule_id", e.rule_id.empty() ? json(nullptr) : json(e.rule_id)},
                        {"sim_before", e.sim_before},
                        {"sim_after", e.sim_after},
                        {"decided_by", e.decided_by},
                        {"decision", e.decision ? 1 : 0}});
  }
  json j;
  if (!snippet_id.empty()) j["snippet_id"] = snippet_id;
  j["bits"] = result.bits.str();
  j["score"] = result.retrieval.score;
  j["match_id"] = result.retrieval.match.id;
  j["runner_up_score"] = result.retrieval.runner_up_score;
  j["low_confidence"] = result.retrieval.low_confidence;
  j["evidence"] = evidence;
  return j.dump();
}

std::vector<ExtractionLine> extraction_lines_from_jsonl(std::string_view content) {
  std::vector<ExtractionLine> out;
  std::istringstream in{std::string(content)};
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      auto j = json::parse(line);
      out.push_back({j.at("snippet_id").get<std::string>(), WatermarkBits::parse(j.at("bits").get<std::string>()),
                     j.at("match_id").get<std::string>(), j.at("score").get<double>()});
    } catch (const json::exception& e) {
      throw FormatError("results line " + std::to_string(no) + ": " + e.what());
    } catch (const InvalidArgument& e) {
      throw FormatError("results line " + std::to_string(no) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace codemark
