#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "codemark/corpus.hpp"

namespace codemark {

enum class Category { naming = 1, loops = 2, math = 3, organization = 4 };

std::string_view to_string(Category c);
Category parse_category(std::string_view name);

/// Round-robin schedule: bit k (1-based) uses category ((k-1) mod 4) + 1.
Category category_for_bit(std::size_t k);

struct TransformationRule {
  std::string rule_id;
  Category category;
  /// Short display name used in prompts, e.g. "CamelCase to snake_case".
  std::string name;
  std::string description;
  /// The inverse rewrite is also in the catalog.
  bool reversible_hint = false;
  /// Has an offline transformer; otherwise only an LLM backend can apply it.
  bool deterministic = false;
};

class RuleCatalog {
 public:
  explicit RuleCatalog(std::vector<TransformationRule> rules);

  std::span<const TransformationRule> rules() const { return rules_; }
  /// Rules of one category in static priority order.
  std::vector<const TransformationRule*> category(Category c) const;
  const TransformationRule* find(std::string_view rule_id) const;
  /// Throws InvalidArgument for unknown ids.
  const TransformationRule& at(std::string_view rule_id) const;
  /// Organization rules in the order tried when a bit's own category has
  /// nothing usable.
  std::vector<const TransformationRule*> fallback_order() const;
  std::vector<const TransformationRule*> deterministic_rules() const;

 private:
  std::vector<TransformationRule> rules_;
};

const RuleCatalog& catalog();

/// JSON array of {rule_id, category, description, deterministic}.
std::string catalog_to_json();

/// True iff apply() would change the text. Always false for rules without a
/// deterministic transformer.
bool is_applicable(const TransformationRule& rule, const CodeSnippet& snippet);
bool is_applicable(const TransformationRule& rule, std::string_view text, Language lang);

/// Throws EngineUnsupported for rules without a transformer and NotApplicable
/// when nothing would change.
CodeSnippet apply(const TransformationRule& rule, const CodeSnippet& snippet);
std::string apply_text(const TransformationRule& rule, std::string_view text, Language lang);

/// Whether applying `rule` to `before` moves it closer to `after`.
bool detect(const TransformationRule& rule, const CodeSnippet& before, const CodeSnippet& after);

}  // namespace codemark
