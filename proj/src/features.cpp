#include "codemark/features.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <nlohmann/json.hpp>

#include "codemark/errors.hpp"
#include "codemark/identifiers.hpp"
#include "codemark/io.hpp"
#include "codemark/tokenizer.hpp"

namespace codemark {

using nlohmann::json;

namespace {

std::vector<char32_t> code_points(std::string_view s) {
  std::vector<char32_t> out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    auto c = static_cast<unsigned char>(s[i]);
    std::size_t len = c < 0x80 ? 1 : (c >> 5) == 0x6 ? 2 : (c >> 4) == 0xE ? 3 : (c >> 3) == 0x1E ? 4 : 1;
    if (i + len > s.size()) len = 1;
    char32_t cp = len == 1 ? c : len == 2 ? (c & 0x1F) : len == 3 ? (c & 0x0F) : (c & 0x07);
    for (std::size_t k = 1; k < len; ++k) cp = (cp << 6) | (static_cast<unsigned char>(s[i + k]) & 0x3F);
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::string strip_whitespace(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

int sign(double d) { return d > 1e-9 ? 1 : d < -1e-9 ? -1 : 0; }

}  // namespace

FeatureProfile extract_profile(const CodeSnippet& snippet) {
  return extract_profile(snippet.text, snippet.language);
}

FeatureProfile extract_profile(std::string_view text, Language lang) {
  FeatureProfile p;
  auto tokens = tokenize(text, lang);
  auto ids = analyze_identifiers(tokens);
  p.fn_name = ids.fn_name;
  p.var_set = ids.variables;
  for (const auto& t : tokens) {
    if (t.kind != TokenKind::identifier && t.kind != TokenKind::op) continue;
    for (std::size_t k = 0; k < kStructuralVocabulary.size(); ++k) {
      if (t.text == kStructuralVocabulary[k]) {
        ++p.struct_vec[k];
        break;
      }
    }
  }
  p.norm_text = strip_whitespace(text);
  return p;
}

std::size_t lev_dist(std::string_view a, std::string_view b) {
  auto x = code_points(a);
  auto y = code_points(b);
  if (x.size() < y.size()) std::swap(x, y);
  std::vector<std::size_t> prev(y.size() + 1), cur(y.size() + 1);
  for (std::size_t j = 0; j <= y.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= x.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= y.size(); ++j) {
      std::size_t sub = prev[j - 1] + (x[i - 1] == y[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[y.size()];
}

double normalized_edit_similarity(std::string_view a, std::string_view b) {
  auto len = std::max(code_points(a).size(), code_points(b).size());
  if (len == 0) return 1.0;
  return 1.0 - static_cast<double>(lev_dist(a, b)) / static_cast<double>(len);
}

double jaccard(const std::set<std::string>& a, const std::set<std::string>& b) {
  if (a.empty() && b.empty()) return 1.0;
  std::size_t inter = 0;
  for (const auto& s : a) inter += b.count(s);
  return static_cast<double>(inter) / static_cast<double>(a.size() + b.size() - inter);
}

double cosine(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
  if (a.size() != b.size()) throw InvalidArgument("cosine: vector lengths differ");
  double dot = 0, na = 0, nb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += static_cast<double>(a[i]) * b[i];
    na += static_cast<double>(a[i]) * a[i];
    nb += static_cast<double>(b[i]) * b[i];
  }
  if (na == 0 && nb == 0) return 1.0;
  if (na == 0 || nb == 0) return 0.0;
  return std::clamp(dot / (std::sqrt(na) * std::sqrt(nb)), 0.0, 1.0);
}

double sim_name(const FeatureProfile& p, const FeatureProfile& q) {
  if (p.fn_name.empty() && q.fn_name.empty()) return 1.0;
  if (p.fn_name.empty() || q.fn_name.empty()) return 0.0;
  return normalized_edit_similarity(p.fn_name, q.fn_name);
}

double sim_vars(const FeatureProfile& p, const FeatureProfile& q) { return jaccard(p.var_set, q.var_set); }

double sim_struct(const FeatureProfile& p, const FeatureProfile& q) {
  return cosine(p.struct_vec, q.struct_vec);
}

double sim_sem(const FeatureProfile& p, const FeatureProfile& q) {
  return normalized_edit_similarity(p.norm_text, q.norm_text);
}

void SimilarityWeights::validate() const {
  for (double w : {alpha, beta, gamma, delta}) {
    if (!(w >= 0.0 && w <= 1.0)) throw InvalidArgument("similarity weights must lie in [0, 1]");
  }
  if (std::abs(alpha + beta + gamma + delta - 1.0) > 1e-9) {
    throw InvalidArgument("similarity weights must sum to 1");
  }
}

std::string weights_to_json(const SimilarityWeights& w) {
  json j = {{"alpha", w.alpha}, {"beta", w.beta}, {"gamma", w.gamma}, {"delta", w.delta}};
  return j.dump(2) + "\n";
}

SimilarityWeights load_weights(const std::filesystem::path& path) {
  SimilarityWeights w;
  try {
    auto j = json::parse(read_file(path));
    w = {j.at("alpha").get<double>(), j.at("beta").get<double>(), j.at("gamma").get<double>(),
         j.at("delta").get<double>()};
  } catch (const json::exception& e) {
    throw FormatError("invalid weights file " + path.string() + ": " + e.what());
  }
  w.validate();
  return w;
}

void save_weights(const SimilarityWeights& w, const std::filesystem::path& path) {
  w.validate();
  write_file_atomic(path, weights_to_json(w));
}

SimilarityBreakdown similarity_breakdown(const FeatureProfile& p, const FeatureProfile& q) {
  return {sim_name(p, q), sim_vars(p, q), sim_struct(p, q), sim_sem(p, q)};
}

double combined_score(const FeatureProfile& p, const FeatureProfile& q, const SimilarityWeights& w) {
  return similarity_breakdown(p, q).combined(w);
}

ClosenessTest compare_closeness(std::string_view baseline, std::string_view candidate,
                                std::string_view target, Language lang, double margin) {
  ClosenessTest r;
  auto pb = extract_profile(baseline, lang);
  auto pc = extract_profile(candidate, lang);
  auto pt = extract_profile(target, lang);
  r.sem_before = sim_sem(pb, pt);
  r.sem_after = sim_sem(pc, pt);
  r.struct_before = sim_struct(pb, pt);
  r.struct_after = sim_struct(pc, pt);
  r.layout_before = normalized_edit_similarity(baseline, target);
  r.layout_after = normalized_edit_similarity(candidate, target);

  double d_sem = r.sem_after - r.sem_before;
  if (std::abs(d_sem) > 1e-9) {
    r.decided_by = "sem";
    r.closer = d_sem > margin;
  } else if (int s = sign(r.struct_after - r.struct_before); s != 0) {
    r.decided_by = "struct";
    r.closer = s > 0;
  } else if (int l = sign(r.layout_after - r.layout_before); l != 0) {
    r.decided_by = "layout";
    r.closer = l > 0;
  } else {
    r.decided_by = "tie";
  }
  return r;
}

GridSearchResult grid_search_weights(std::span<const DevPair> dev_pairs,
                                     const CandidateCodebase& codebase) {
  if (dev_pairs.empty()) throw InvalidArgument("grid search needs at least one dev pair");
  if (codebase.empty()) throw InvalidArgument("grid search needs a non-empty codebase");

  auto snippets = codebase.snippets();
  std::vector<FeatureProfile> profiles;
  profiles.reserve(snippets.size());
  for (const auto& s : snippets) profiles.push_back(extract_profile(s));

  struct PairTable {
    std::size_t truth;
    std::vector<SimilarityBreakdown> rows;
  };
  std::vector<PairTable> tables;
  for (const auto& pair : dev_pairs) {
    auto it = std::find_if(snippets.begin(), snippets.end(),
                           [&](const CodeSnippet& s) { return s.id == pair.original_id; });
    if (it == snippets.end()) {
      throw InvalidArgument("dev pair original '" + pair.original_id + "' is not in the codebase");
    }
    PairTable t{static_cast<std::size_t>(it - snippets.begin()), {}};
    auto wp = extract_profile(pair.watermarked);
    for (const auto& p : profiles) t.rows.push_back(similarity_breakdown(wp, p));
    tables.push_back(std::move(t));
  }

  GridSearchResult best;
  std::size_t best_hits = 0;
  bool have = false;
  for (int a = 0; a <= 10; ++a) {
    for (int b = 0; a + b <= 10; ++b) {
      for (int c = 0; a + b + c <= 10; ++c) {
        SimilarityWeights w{a / 10.0, b / 10.0, c / 10.0, (10 - a - b - c) / 10.0};
        ++best.evaluated;
        std::size_t hits = 0;
        double margin_sum = 0;
        for (const auto& t : tables) {
          std::size_t top = 0;
          double top_score = -1, competitor = -1;
          for (std::size_t i = 0; i < t.rows.size(); ++i) {
            double s = t.rows[i].combined(w);
            if (s > top_score) {
              top_score = s;
              top = i;
            }
            if (i != t.truth) competitor = std::max(competitor, s);
          }
          if (top == t.truth) ++hits;
          double truth_score = t.rows[t.truth].combined(w);
          margin_sum += competitor < 0 ? truth_score : truth_score - competitor;
        }
        double margin = margin_sum / static_cast<double>(tables.size());
        if (!have || hits > best_hits || (hits == best_hits && margin > best.mean_margin + 1e-12)) {
          have = true;
          best_hits = hits;
          best.weights = w;
          best.mean_margin = margin;
        }
      }
    }
  }
  best.accuracy = static_cast<double>(best_hits) / static_cast<double>(tables.size());
  return best;
}

}  // namespace codemark
