#include "codemark/embedder.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "codemark/errors.hpp"
#include "codemark/io.hpp"

namespace codemark {

namespace {

template <typename E>
[[noreturn]] void rethrow_as(const E& e, std::size_t bit) {
  throw E("bit " + std::to_string(bit) + ": " + e.what());
}

/// Re-raises backend errors with the bit index prepended.
template <typename Fn>
auto with_bit_context(std::size_t bit, Fn&& fn) {
  try {
    return fn();
  } catch (const NetworkError& e) {
    rethrow_as(e, bit);
  } catch (const ParseError& e) {
    rethrow_as(e, bit);
  } catch (const CredentialError& e) {
    rethrow_as(e, bit);
  }
}

std::optional<Candidate> try_rule(const Backend& backend, const CodeSnippet& current,
                                  const TransformationRule& rule, bool fallback) {
  auto verdict = backend.transform(current, rule);
  if (!verdict.rule_confirmed || verdict.output_text.empty() || verdict.output_text == current.text) {
    return std::nullopt;
  }
  if (!backend.verify_semantics(current, current.with_text(verdict.output_text))) return std::nullopt;
  return Candidate{&rule, std::move(verdict.output_text), fallback};
}

std::string record_timestamp(const Backend& backend) {
  const char* epoch = std::getenv("SOURCE_DATE_EPOCH");
  if (backend.is_mock() && !(epoch && *epoch)) return "1970-01-01T00:00:00Z";
  return utc_timestamp();
}

}  // namespace

EmbeddingPlan plan(const Backend& backend, const CodeSnippet& snippet, std::size_t n) {
  if (n == 0) throw InvalidArgument("a watermark needs at least one bit");
  EmbeddingPlan p;
  p.snippet_id = snippet.id;
  for (std::size_t k = 1; k <= n; ++k) {
    PlanEntry e;
    e.bit = k;
    e.category = category_for_bit(k);
    e.ranked = with_bit_context(k, [&] { return backend.rank_rules(snippet, e.category); });
    p.per_bit.push_back(std::move(e));
  }
  return p;
}

std::optional<Candidate> select_candidate(const Backend& backend, const CodeSnippet& current,
                                          const PlanEntry& entry, const std::set<std::string>& claimed) {
  std::size_t tried = 0;
  for (const auto* rule : entry.ranked) {
    if (tried == kMaxCandidates) break;
    if (claimed.count(rule->rule_id)) continue;
    ++tried;
    if (auto c = try_rule(backend, current, *rule, false)) return c;
  }
  for (const auto* rule : catalog().fallback_order()) {
    if (claimed.count(rule->rule_id)) continue;
    if (rule->category == entry.category &&
        std::find(entry.ranked.begin(), entry.ranked.end(), rule) != entry.ranked.end()) {
      continue;
    }
    if (backend.is_mock() && !is_applicable(*rule, current)) continue;
    if (auto c = try_rule(backend, current, *rule, true)) return c;
  }
  return std::nullopt;
}

std::string_view to_string(BitStatus s) {
  switch (s) {
    case BitStatus::applied: return "applied";
    case BitStatus::skipped: return "skipped";
    case BitStatus::fallback: return "fallback";
    case BitStatus::failed: return "failed";
  }
  return "failed";
}

const CodeSnippet& EmbeddingOutcome::require() const {
  if (!success || !watermarked) throw EmbeddingFailed("embedding of " + record.snippet_id + " failed: " + error);
  return *watermarked;
}

EmbeddingOutcome embed(const Backend& backend, const CodeSnippet& snippet, const WatermarkBits& bits,
                       const EmbeddingPlan& p) {
  if (p.snippet_id != snippet.id) {
    throw InvalidArgument("plan for '" + p.snippet_id + "' used with snippet '" + snippet.id + "'");
  }
  if (p.per_bit.size() != bits.size()) {
    throw InvalidArgument("plan has " + std::to_string(p.per_bit.size()) + " bits, watermark has " +
                          std::to_string(bits.size()));
  }
  EmbeddingOutcome out{std::nullopt, WatermarkRecord{snippet.id, bits, {}, backend.tag(), record_timestamp(backend)},
                       {}, true, ""};
  CodeSnippet current = snippet;
  std::set<std::string> claimed;
  for (std::size_t i = 0; i < p.per_bit.size(); ++i) {
    const auto& entry = p.per_bit[i];
    auto cand = with_bit_context(entry.bit, [&] { return select_candidate(backend, current, entry, claimed); });
    BitOutcome status{entry.bit, BitStatus::skipped, "", ""};
    RuleUse use{entry.bit, "", false};
    if (cand) {
      claimed.insert(cand->rule->rule_id);
      use.rule_id = status.rule_id = cand->rule->rule_id;
    } else {
      use.rule_id = catalog().category(entry.category).front()->rule_id;
    }
    if (bits[i]) {
      if (cand) {
        current = current.with_text(std::move(cand->text));
        status.status = cand->fallback ? BitStatus::fallback : BitStatus::applied;
        use.applied = true;
      } else {
        status.status = BitStatus::failed;
        status.reason = "no applicable rule passed verification";
        out.success = false;
        if (out.error.empty()) out.error = "bit " + std::to_string(entry.bit) + ": " + status.reason;
      }
    } else {
      status.reason = "bit is 0";
    }
    out.record.per_bit_rules.push_back(use);
    out.per_bit_status.push_back(std::move(status));
  }
  if (out.success) out.watermarked = std::move(current);
  return out;
}

EmbeddingOutcome embed(const Backend& backend, const CodeSnippet& snippet, const WatermarkBits& bits) {
  return embed(backend, snippet, bits, plan(backend, snippet, bits.size()));
}

BitSource BitSource::random(std::uint64_t seed) {
  BitSource s;
  s.rng_.seed(seed);
  return s;
}

BitSource BitSource::fixed(WatermarkBits bits) {
  BitSource s;
  s.fixed_ = std::move(bits);
  return s;
}

WatermarkBits BitSource::next(std::size_t n) {
  if (n == 0) throw InvalidArgument("a watermark needs at least one bit");
  if (fixed_) {
    if (fixed_->size() != n) {
      throw InvalidArgument("fixed watermark has " + std::to_string(fixed_->size()) + " bits, expected " +
                            std::to_string(n));
    }
    return *fixed_;
  }
  std::vector<std::uint8_t> bits(n);
  for (auto& b : bits) b = static_cast<std::uint8_t>(rng_() >> 63);
  return WatermarkBits(std::move(bits));
}

void parallel_for(std::size_t count, std::size_t jobs, const std::function<void(std::size_t)>& fn) {
  jobs = std::max<std::size_t>(1, std::min(jobs, count));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex mu;
  std::vector<std::thread> workers;
  for (std::size_t j = 0; j < jobs; ++j) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(mu);
          if (!first_error) first_error = std::current_exception();
        }
      }
    });
  }
  for (auto& w : workers) w.join();
  if (first_error) std::rethrow_exception(first_error);
}

std::vector<EmbeddingOutcome> embed_batch(const Backend& backend, const CandidateCodebase& codebase,
                                          BitSource& source, std::size_t n, std::size_t jobs) {
  auto snippets = codebase.snippets();
  std::vector<WatermarkBits> bits;
  bits.reserve(snippets.size());
  for (std::size_t i = 0; i < snippets.size(); ++i) bits.push_back(source.next(n));

  std::vector<std::optional<EmbeddingOutcome>> slots(snippets.size());
  parallel_for(snippets.size(), jobs, [&](std::size_t i) {
    try {
      slots[i] = embed(backend, snippets[i], bits[i]);
    } catch (const Error& e) {
      slots[i] = EmbeddingOutcome{
          std::nullopt, WatermarkRecord{snippets[i].id, bits[i], {}, backend.tag(), record_timestamp(backend)},
          {}, false, e.what()};
    }
  });
  std::vector<EmbeddingOutcome> outcomes;
  outcomes.reserve(slots.size());
  for (auto& s : slots) outcomes.push_back(std::move(*s));
  return outcomes;
}

std::string replay_record(const WatermarkRecord& record, const CodeSnippet& original) {
  std::string text = original.text;
  for (const auto& use : record.per_bit_rules) {
    if (use.applied) text = apply_text(catalog().at(use.rule_id), text, original.language);
  }
  return text;
}

}  // namespace codemark
