#include "codemark/attacks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <nlohmann/json.hpp>

#include "codemark/errors.hpp"
#include "codemark/identifiers.hpp"
#include "codemark/rules.hpp"
#include "codemark/tokenizer.hpp"

namespace codemark {

using nlohmann::json;

std::string_view to_string(AttackKind kind) {
  switch (kind) {
    case AttackKind::rename: return "rename";
    case AttackKind::transform: return "transform";
    case AttackKind::paraphrase: return "paraphrase";
  }
  return "rename";
}

AttackKind parse_attack_kind(std::string_view name) {
  if (name == "rename") return AttackKind::rename;
  if (name == "transform") return AttackKind::transform;
  if (name == "paraphrase") return AttackKind::paraphrase;
  throw InvalidArgument("unknown attack kind '" + std::string(name) + "'");
}

void AttackSpec::validate() const {
  if (kind == AttackKind::rename && !(p > 0.0 && p <= 1.0)) throw InvalidArgument("rename fraction must lie in (0, 1]");
  if (kind == AttackKind::transform && k < 1) throw InvalidArgument("transform count must be at least 1");
}

std::string AttackSpec::label() const {
  switch (kind) {
    case AttackKind::rename: return "V@" + std::to_string(static_cast<int>(std::lround(p * 100))) + "%";
    case AttackKind::transform: return "T@" + std::to_string(k);
    case AttackKind::paraphrase: return "paraphrase";
  }
  return "";
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) throw InvalidArgument("uniform_below needs a positive bound");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % n + 1) % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x > limit);
  return x % n;
}

AttackResult rename_attack(const CodeSnippet& snippet, double p, std::uint64_t seed) {
  if (!(p > 0.0 && p <= 1.0)) throw InvalidArgument("rename fraction must lie in (0, 1]");
  AttackResult result{snippet, {}, {}, ""};
  auto tokens = tokenize(snippet.text, snippet.language);
  auto ids = analyze_identifiers(tokens);
  std::vector<std::string> pool(ids.variables.begin(), ids.variables.end());
  if (pool.empty()) {
    result.warning = "no renamable identifiers";
    return result;
  }
  auto count = static_cast<std::size_t>(std::ceil(p * static_cast<double>(pool.size()) - 1e-9));
  count = std::clamp<std::size_t>(count, 1, pool.size());

  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    auto j = i + uniform_below(rng, pool.size() - i);
    std::swap(pool[i], pool[j]);
  }

  std::map<std::string, std::string> mapping;
  std::size_t next = 0;
  for (std::size_t i = 0; i < count; ++i) {
    std::string fresh;
    do {
      fresh = "var_" + std::to_string(next++);
    } while (ids.all.count(fresh) || is_reserved(fresh));
    mapping[pool[i]] = fresh;
    result.renamed.emplace_back(pool[i], fresh);
  }
  for (auto& t : tokens) {
    if (t.kind != TokenKind::identifier) continue;
    if (auto it = mapping.find(t.text); it != mapping.end()) t.text = it->second;
  }
  result.attacked = snippet.with_text(join_tokens(tokens));
  return result;
}

AttackResult transform_attack(const CodeSnippet& snippet, std::size_t k, std::uint64_t seed) {
  if (k < 1) throw InvalidArgument("transform count must be at least 1");
  AttackResult result{snippet, {}, {}, ""};
  auto pool = catalog().deterministic_rules();
  std::mt19937_64 rng(seed);
  std::string text = snippet.text;
  while (result.applied_rules.size() < k) {
    std::vector<std::size_t> usable;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (is_applicable(*pool[i], text, snippet.language)) usable.push_back(i);
    }
    if (usable.empty()) break;
    auto pick = usable[uniform_below(rng, usable.size())];
    text = apply_text(*pool[pick], text, snippet.language);
    result.applied_rules.push_back(pool[pick]->rule_id);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  if (result.applied_rules.size() < k) {
    result.warning = "only " + std::to_string(result.applied_rules.size()) + " applicable rules";
  }
  result.attacked = snippet.with_text(std::move(text));
  return result;
}

AttackResult paraphrase_attack(const Backend& backend, const CodeSnippet& snippet) {
  return AttackResult{snippet.with_text(backend.paraphrase(snippet)), {}, {}, ""};
}

AttackResult run_attack(const AttackSpec& spec, const Backend& backend, const CodeSnippet& snippet) {
  spec.validate();
  switch (spec.kind) {
    case AttackKind::rename: return rename_attack(snippet, spec.p, spec.seed);
    case AttackKind::transform: return transform_attack(snippet, spec.k, spec.seed);
    case AttackKind::paraphrase: return paraphrase_attack(backend, snippet);
  }
  throw InvalidArgument("unknown attack kind");
}

std::string attack_metadata_json(const AttackSpec& spec, const AttackResult& result) {
  json j;
  j["snippet_id"] = result.attacked.id;
  j["kind"] = to_string(spec.kind);
  switch (spec.kind) {
    case AttackKind::rename:
      j["params"] = {{"p", spec.p}};
      j["seed"] = spec.seed;
      j["renamed"] = json::array();
      for (const auto& [from, to] : result.renamed) j["renamed"].push_back({{"from", from}, {"to", to}});
      break;
    case AttackKind::transform:
      j["params"] = {{"k", spec.k}};
      j["seed"] = spec.seed;
      j["applied_rules"] = result.applied_rules;
      break;
    case AttackKind::paraphrase:
      j["params"] = json::object();
      break;
  }
  if (!result.warning.empty()) j["warning"] = result.warning;
  return j.dump();
}

}  // namespace codemark
