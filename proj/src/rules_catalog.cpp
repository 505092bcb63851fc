#include <algorithm>
#include <nlohmann/json.hpp>

#include "codemark/errors.hpp"
#include "codemark/rules.hpp"
#include "engine.hpp"

namespace codemark {

std::string_view to_string(Category c) {
  switch (c) {
    case Category::naming: return "naming";
    case Category::loops: return "loops";
    case Category::math: return "math";
    case Category::organization: return "organization";
  }
  return "unknown";
}

Category parse_category(std::string_view name) {
  for (auto c : {Category::naming, Category::loops, Category::math, Category::organization}) {
    if (to_string(c) == name) return c;
  }
  throw InvalidArgument("unknown rule category '" + std::string(name) + "'");
}

Category category_for_bit(std::size_t k) {
  if (k == 0) throw InvalidArgument("bit positions are 1-based");
  return static_cast<Category>((k - 1) % 4 + 1);
}

RuleCatalog::RuleCatalog(std::vector<TransformationRule> rules) : rules_(std::move(rules)) {}

std::vector<const TransformationRule*> RuleCatalog::category(Category c) const {
  std::vector<const TransformationRule*> out;
  for (const auto& r : rules_) {
    if (r.category == c) out.push_back(&r);
  }
  return out;
}

const TransformationRule* RuleCatalog::find(std::string_view rule_id) const {
  for (const auto& r : rules_) {
    if (r.rule_id == rule_id) return &r;
  }
  return nullptr;
}

const TransformationRule& RuleCatalog::at(std::string_view rule_id) const {
  if (const auto* r = find(rule_id)) return *r;
  throw InvalidArgument("unknown rule id '" + std::string(rule_id) + "'");
}

std::vector<const TransformationRule*> RuleCatalog::fallback_order() const {
  static constexpr std::string_view order[] = {
      "organization.add_braces",      "organization.insert_blank_line",
      "organization.format_spacing",  "organization.adjust_op_space",
      "organization.split_decl",      "organization.reorder_decl",
      "organization.inline_temp_var", "organization.optimize_cond",
      "organization.reorder_cond",    "organization.swap_params"};
  std::vector<const TransformationRule*> out;
  for (auto id : order) out.push_back(&at(id));
  return out;
}

std::vector<const TransformationRule*> RuleCatalog::deterministic_rules() const {
  std::vector<const TransformationRule*> out;
  for (const auto& r : rules_) {
    if (r.deterministic) out.push_back(&r);
  }
  return out;
}

namespace {

std::vector<TransformationRule> build_rules() {
  using C = Category;
  struct Row {
    const char* id;
    C cat;
    const char* name;
    const char* description;
    bool reversible;
  };
  // Within a category the row order is the static priority.
  static const Row rows[] = {
      {"naming.to_pascal", C::naming, "To PascalCase",
       "Capitalize every word of lower-case identifiers: scale() becomes Scale().", false},
      {"naming.camel_to_snake", C::naming, "CamelCase to snake_case",
       "Rewrite lowerCamel identifiers with underscores: readBlock() becomes read_block().", true},
      {"naming.snake_to_camel", C::naming, "snake_case to CamelCase",
       "Join snake_case identifiers into lowerCamel: row_count becomes rowCount.", true},
      {"naming.add_suffix", C::naming, "Add suffix",
       "Append the suffix Val to renamable identifiers: total becomes totalVal.", false},
      {"naming.to_uppercase", C::naming, "To UPPERCASE",
       "Upper-case identifiers that contain lower-case letters: limit becomes LIMIT.", true},
      {"naming.to_lowercase", C::naming, "To lowercase",
       "Lower-case identifiers that contain capitals: Limit becomes limit.", true},

      {"loops.for_to_while", C::loops, "for to while",
       "Turn a counted for loop into its initializer followed by a while loop.", true},
      {"loops.while_to_do_while", C::loops, "while to do-while",
       "Turn while(c){...} into a guarded do{...} while(c); loop.", false},
      {"loops.while_to_for", C::loops, "while to for",
       "Express a while loop as a for loop with empty init and step.", true},
      {"loops.flatten_nested_loop", C::loops, "Flatten nested loop",
       "Merge two nested counted loops into one loop over the product range.", false},
      {"loops.step_increment", C::loops, "Step increment",
       "Change the loop step, unrolling the body to keep the iteration set.", false},
      {"loops.reverse_loop", C::loops, "Reverse loop",
       "Iterate the index range backwards when iterations are independent.", false},

      {"math.group_ops", C::math, "Group ops",
       "Add explicit grouping to an associative chain: a + b + c becomes a + (b + c).", false},
      {"math.mul_to_add", C::math, "Mul to add",
       "Replace multiplication by two with an addition: 2 * n becomes n + n.", false},
      {"math.factorization", C::math, "Factorization",
       "Factor out a common term: k*a + k*b becomes k*(a + b).", true},
      {"math.identity_transform", C::math, "Identity transform",
       "Use an algebraic identity: a*a - b*b becomes (a - b)*(a + b).", false},
      {"math.div_to_reciprocal", C::math, "Div to reciprocal",
       "Rewrite a division as multiplication by a reciprocal.", false},
      {"math.pow_to_mul", C::math, "Pow to mul",
       "Expand a small integer power into repeated multiplication.", false},
      {"math.expand_distributive", C::math, "Expand distributive",
       "Distribute a product over a sum: k*(a + b) becomes k*a + k*b.", true},

      {"organization.optimize_cond", C::organization, "Optimize cond.",
       "Negate an if condition and swap its then and else branches.", false},
      {"organization.reorder_cond", C::organization, "Reorder cond.",
       "Swap the two side-effect-free operands of a && or || condition.", true},
      {"organization.swap_params", C::organization, "Swap params",
       "Swap the arguments of a commutative call such as max(a, b).", true},
      {"organization.inline_temp_var", C::organization, "Inline temp var",
       "Return an expression directly instead of through a one-use temporary.", false},
      {"organization.split_decl", C::organization, "Split decl.",
       "Split a multi-variable declaration into one declaration per variable.", false},
      {"organization.reorder_decl", C::organization, "Reorder decl.",
       "Swap two adjacent independent declarations.", true},
      {"organization.insert_blank_line", C::organization, "Insert blank line",
       "Insert one blank line after the first statement.", false},
      {"organization.add_braces", C::organization, "Add braces",
       "Wrap single statements in braces: if(ok) return; becomes if(ok){ return; }.", false},
      {"organization.format_spacing", C::organization, "Format spacing",
       "Put spaces around assignment operators and after commas.", false},
      {"organization.adjust_op_space", C::organization, "Adjust op space",
       "Put spaces around binary arithmetic, comparison and logical operators.", false},
  };
  std::vector<TransformationRule> out;
  for (const auto& r : rows) {
    bool deterministic = engine::find_transformer(r.id) != nullptr;
    out.push_back({r.id, r.cat, r.name, r.description, r.reversible, deterministic});
  }
  return out;
}

}  // namespace

const RuleCatalog& catalog() {
  static const RuleCatalog instance(build_rules());
  return instance;
}

std::string catalog_to_json() {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : catalog().rules()) {
    arr.push_back({{"rule_id", r.rule_id},
                   {"category", to_string(r.category)},
                   {"name", r.name},
                   {"description", r.description},
                   {"deterministic", r.deterministic}});
  }
  return arr.dump(2) + "\n";
}

}  // namespace codemark
