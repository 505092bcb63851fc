#include "codemark/rules.hpp"

#include <map>
#include <optional>

#include "codemark/errors.hpp"
#include "codemark/features.hpp"
#include "engine.hpp"

namespace codemark {
namespace engine {

const Transformer* find_transformer(std::string_view rule_id) {
  static const std::map<std::string, Transformer, std::less<>> table = {
      {"naming.camel_to_snake", camel_to_snake},
      {"naming.snake_to_camel", snake_to_camel},
      {"naming.to_pascal", to_pascal},
      {"naming.to_uppercase", to_uppercase},
      {"naming.to_lowercase", to_lowercase},
      {"naming.add_suffix", add_suffix},
      {"loops.for_to_while", for_to_while},
      {"loops.while_to_do_while", while_to_do_while},
      {"organization.optimize_cond", optimize_cond},
      {"organization.reorder_decl", reorder_decl},
      {"organization.swap_params", swap_params},
      {"organization.format_spacing", format_spacing},
      {"organization.add_braces", add_braces},
      {"organization.reorder_cond", reorder_cond},
      {"organization.insert_blank_line", insert_blank_line},
      {"organization.adjust_op_space", adjust_op_space},
      {"organization.inline_temp_var", inline_temp_var},
      {"organization.split_decl", split_decl},
  };
  auto it = table.find(rule_id);
  return it == table.end() ? nullptr : &it->second;
}

}  // namespace engine

namespace {

std::optional<std::string> run(const TransformationRule& rule, std::string_view text, Language lang) {
  const auto* fn = engine::find_transformer(rule.rule_id);
  if (!fn) return std::nullopt;
  engine::SourceView view(text, lang);
  return (*fn)(view);
}

}  // namespace

bool is_applicable(const TransformationRule& rule, std::string_view text, Language lang) {
  auto out = run(rule, text, lang);
  return out && *out != text;
}

bool is_applicable(const TransformationRule& rule, const CodeSnippet& snippet) {
  return is_applicable(rule, snippet.text, snippet.language);
}

std::string apply_text(const TransformationRule& rule, std::string_view text, Language lang) {
  auto out = run(rule, text, lang);
  if (!out) throw EngineUnsupported("rule " + rule.rule_id + " has no offline transformer");
  if (*out == text) throw NotApplicable("rule " + rule.rule_id + " does not apply to this snippet");
  return *out;
}

CodeSnippet apply(const TransformationRule& rule, const CodeSnippet& snippet) {
  return snippet.with_text(apply_text(rule, snippet.text, snippet.language));
}

bool detect(const TransformationRule& rule, const CodeSnippet& before, const CodeSnippet& after) {
  auto out = run(rule, before.text, before.language);
  if (!out || *out == before.text) return false;
  return compare_closeness(before.text, *out, after.text, before.language).closer;
}

}  // namespace codemark
