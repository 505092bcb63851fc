#include <CLI11.hpp>
#include <iostream>
#include <map>
#include <nlohmann/json.hpp>
#include <sstream>

#include "codemark/attacks.hpp"
#include "codemark/corpus.hpp"
#include "codemark/embedder.hpp"
#include "codemark/errors.hpp"
#include "codemark/evaluator.hpp"
#include "codemark/extractor.hpp"
#include "codemark/io.hpp"
#include "codemark/pipeline.hpp"
#include "codemark/rules.hpp"
#include "codemark/run_config.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace codemark;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string config_path;
  std::string backend;
  std::size_t jobs = 0;
};

RunConfig load_config(const Globals& g) {
  RunConfig c = g.config_path.empty() ? RunConfig{} : RunConfig::load(g.config_path);
  if (!g.backend.empty()) c.backend = g.backend;
  if (g.jobs) c.jobs = g.jobs;
  c.validate();
  return c;
}

/// A directory, a codebase JSONL file, or one source file.
CandidateCodebase load_snippets(const fs::path& input) {
  if (fs::is_directory(input)) return ingest_directory(input);
  if (input.extension() == ".jsonl") return load_codebase(input);
  auto lang = language_from_extension(input.extension().string());
  if (lang == Language::unknown) throw UsageError("cannot infer the language of " + input.string());
  return CandidateCodebase({CodeSnippet::make(input.filename().string(), lang, read_file(input), "file")});
}

void write_snippet_tree(const fs::path& dir, std::span<const CodeSnippet> snippets) {
  for (const auto& s : snippets) write_file_atomic(dir / s.id, s.text);
}

std::string jsonl(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

std::optional<AttackSpec> attack_from_flags(const std::string& kind, double p, std::size_t k, std::uint64_t seed) {
  if (kind.empty()) return std::nullopt;
  AttackSpec spec;
  try {
    spec.kind = parse_attack_kind(kind);
    spec.p = p;
    spec.k = k;
    spec.seed = seed;
    spec.validate();
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
  return spec;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Source-code watermarking through semantics-preserving rewrites"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--config", g.config_path, "Run config JSON");
  app.add_option("--backend", g.backend, "mock or remote")->check(CLI::IsMember({"mock", "remote"}));
  app.add_option("--jobs", g.jobs, "Parallel jobs");

  // ingest
  auto* ingest = app.add_subcommand("ingest", "Build a codebase file from a directory");
  std::string ingest_dir, ingest_out;
  std::vector<std::string> ingest_langs;
  ingest->add_option("dir", ingest_dir)->required()->check(CLI::ExistingDirectory);
  ingest->add_option("-o,--output", ingest_out)->required();
  ingest->add_option("--lang", ingest_langs)->delimiter(',');

  // embed
  auto* embed_cmd = app.add_subcommand("embed", "Watermark every snippet of a codebase");
  std::string embed_codebase, embed_bits, embed_out;
  std::optional<std::uint64_t> embed_seed;
  std::optional<std::size_t> embed_n;
  embed_cmd->add_option("-c,--codebase", embed_codebase)->required();
  auto* bits_opt = embed_cmd->add_option("--bits", embed_bits, "Fixed watermark for every snippet");
  embed_cmd->add_option("--seed", embed_seed, "Seed for random watermarks")->excludes(bits_opt);
  embed_cmd->add_option("--n", embed_n, "Bits per snippet");
  embed_cmd->add_option("-o,--output", embed_out)->required();

  // extract
  auto* extract_cmd = app.add_subcommand("extract", "Recover watermarks");
  std::string extract_codebase, extract_input, extract_weights, extract_out;
  std::optional<std::size_t> extract_n;
  extract_cmd->add_option("-c,--codebase", extract_codebase)->required();
  extract_cmd->add_option("-i,--input", extract_input)->required();
  extract_cmd->add_option("--weights", extract_weights);
  extract_cmd->add_option("--n", extract_n);
  extract_cmd->add_option("-o,--output", extract_out)->required();

  // attack
  auto* attack_cmd = app.add_subcommand("attack", "Apply a removal attack");
  std::string attack_input, attack_kind, attack_out;
  double attack_p = 0.5;
  std::size_t attack_k = 1;
  std::uint64_t attack_seed = 0;
  attack_cmd->add_option("-i,--input", attack_input)->required();
  attack_cmd->add_option("--kind", attack_kind)->required()->check(CLI::IsMember({"rename", "transform", "paraphrase"}));
  attack_cmd->add_option("--p", attack_p);
  attack_cmd->add_option("--k", attack_k);
  attack_cmd->add_option("--seed", attack_seed);
  attack_cmd->add_option("-o,--output", attack_out)->required();

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "Score extraction results against records");
  std::string eval_records, eval_results, eval_tests, eval_watermarked, eval_codebase, eval_out;
  eval_cmd->add_option("--records", eval_records)->required();
  eval_cmd->add_option("--results", eval_results)->required();
  eval_cmd->add_option("--tests", eval_tests, "Test suite JSON");
  eval_cmd->add_option("--watermarked", eval_watermarked, "Watermarked codebase JSONL");
  eval_cmd->add_option("-c,--codebase", eval_codebase, "Original codebase JSONL");
  eval_cmd->add_option("-o,--output", eval_out)->required();

  // pipeline
  auto* pipe_cmd = app.add_subcommand("pipeline", "Embed, attack, extract and report in one run");
  std::string pipe_codebase, pipe_out, pipe_attack, pipe_tests;
  double pipe_p = 0.5;
  std::size_t pipe_k = 1;
  std::uint64_t pipe_attack_seed = 0;
  std::optional<std::uint64_t> pipe_seed;
  std::optional<std::size_t> pipe_n;
  pipe_cmd->add_option("-c,--codebase", pipe_codebase)->required();
  pipe_cmd->add_option("--attack", pipe_attack)->check(CLI::IsMember({"rename", "transform", "paraphrase"}));
  pipe_cmd->add_option("--p", pipe_p);
  pipe_cmd->add_option("--k", pipe_k);
  pipe_cmd->add_option("--attack-seed", pipe_attack_seed);
  pipe_cmd->add_option("--seed", pipe_seed);
  pipe_cmd->add_option("--n", pipe_n);
  pipe_cmd->add_option("--tests", pipe_tests, "Test suite JSON");
  pipe_cmd->add_option("-o,--output", pipe_out)->required();

  // tune-weights
  auto* tune_cmd = app.add_subcommand("tune-weights", "Grid-search retrieval weights");
  std::string tune_codebase, tune_dev, tune_out;
  tune_cmd->add_option("-c,--codebase", tune_codebase)->required();
  tune_cmd->add_option("--dev", tune_dev)->required();
  tune_cmd->add_option("-o,--output", tune_out)->required();

  // rules export
  auto* rules_cmd = app.add_subcommand("rules", "Rule catalog");
  rules_cmd->require_subcommand(1);
  auto* export_cmd = rules_cmd->add_subcommand("export", "Print the catalog as JSON");
  std::string export_out;
  export_cmd->add_option("-o,--output", export_out);
  auto* check_cmd = rules_cmd->add_subcommand("check", "List the rules that apply to each snippet");
  std::string check_input;
  check_cmd->add_option("-i,--input", check_input)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*ingest) {
      std::optional<std::set<Language>> filter;
      if (!ingest_langs.empty()) {
        filter.emplace();
        for (const auto& l : ingest_langs) {
          try {
            filter->insert(parse_language(l));
          } catch (const InvalidArgument& e) {
            throw UsageError(e.what());
          }
        }
      }
      auto cb = ingest_directory(ingest_dir, filter);
      save_codebase(cb, ingest_out);
      std::cout << "ingested " << cb.size() << " snippets (" << cb.duplicates_dropped() << " duplicates dropped, "
                << cb.skipped_files() << " files skipped) -> " << ingest_out << "\n";
    } else if (*embed_cmd) {
      auto config = load_config(g);
      std::size_t n = embed_n.value_or(config.n);
      if (n == 0) throw UsageError("--n must be at least 1");
      std::optional<WatermarkBits> fixed;
      if (!embed_bits.empty()) {
        try {
          fixed = WatermarkBits::parse(embed_bits);
        } catch (const InvalidArgument& e) {
          throw UsageError(e.what());
        }
        if (fixed->size() != n) {
          throw UsageError("--bits has " + std::to_string(fixed->size()) + " bits but n is " + std::to_string(n));
        }
      }
      auto source = fixed ? BitSource::fixed(*fixed) : BitSource::random(embed_seed.value_or(config.seed));
      auto cb = load_codebase(embed_codebase);
      auto backend = config.make_backend();
      auto outcomes = embed_batch(backend, cb, source, n, config.jobs);

      std::vector<WatermarkRecord> records;
      std::vector<CodeSnippet> marked;
      std::vector<std::string> status_lines;
      std::size_t failed = 0;
      for (const auto& o : outcomes) {
        json st = {{"snippet_id", o.record.snippet_id}, {"success", o.success}, {"bits", o.record.bits.str()}};
        if (!o.error.empty()) st["error"] = o.error;
        st["per_bit"] = json::array();
        for (const auto& b : o.per_bit_status) {
          st["per_bit"].push_back(
              {{"bit", b.bit}, {"status", to_string(b.status)}, {"rule_id", b.rule_id}, {"reason", b.reason}});
        }
        status_lines.push_back(st.dump());
        if (!o.success) {
          ++failed;
          std::cerr << "embedding failed for " << o.record.snippet_id << ": " << o.error << "\n";
          continue;
        }
        records.push_back(o.record);
        marked.push_back(*o.watermarked);
      }
      fs::path out = embed_out;
      save_records(records, out / "records.jsonl");
      write_file_atomic(out / "status.jsonl", jsonl(status_lines));
      write_file_atomic(out / "watermarked.jsonl", codebase_to_jsonl(CandidateCodebase(marked)));
      write_snippet_tree(out / "snippets", marked);
      std::cout << "embedded " << records.size() << "/" << outcomes.size() << " snippets (" << failed
                << " failed, backend " << backend.tag() << ") -> " << out.string() << "\n";
      if (records.empty() && !outcomes.empty()) return 1;
    } else if (*extract_cmd) {
      auto config = load_config(g);
      if (!extract_weights.empty()) config.weights = load_weights(extract_weights);
      std::size_t n = extract_n.value_or(config.n);
      if (n == 0) throw UsageError("--n must be at least 1");
      auto cb = load_codebase(extract_codebase);
      if (cb.empty()) throw Error("candidate codebase " + extract_codebase + " is empty");
      CodebaseIndex index(cb);
      auto inputs = load_snippets(extract_input);
      auto backend = config.make_backend();
      auto snippets = inputs.snippets();
      std::vector<std::string> lines(snippets.size());
      std::size_t low = 0;
      parallel_for(snippets.size(), config.jobs, [&](std::size_t i) {
        auto r = extract(backend, snippets[i], index, config.weights, n, config.policy);
        lines[i] = extraction_to_json(r, snippets[i].id);
      });
      for (const auto& l : lines) low += json::parse(l).at("low_confidence").get<bool>();
      write_file_atomic(extract_out, jsonl(lines));
      std::cout << "extracted " << lines.size() << " watermarks (" << low << " low-confidence matches) -> "
                << extract_out << "\n";
    } else if (*attack_cmd) {
      auto config = load_config(g);
      auto spec = *attack_from_flags(attack_kind, attack_p, attack_k, attack_seed);
      auto inputs = load_snippets(attack_input);
      auto backend = config.make_backend();
      std::vector<CodeSnippet> attacked;
      std::vector<std::string> meta;
      std::size_t i = 0;
      for (const auto& s : inputs.snippets()) {
        auto per = spec;
        per.seed += i++;
        auto r = run_attack(per, backend, s);
        if (!r.warning.empty()) std::cerr << s.id << ": " << r.warning << "\n";
        meta.push_back(attack_metadata_json(per, r));
        attacked.push_back(r.attacked);
      }
      fs::path out = attack_out;
      write_snippet_tree(out / "snippets", attacked);
      write_file_atomic(out / "attacked.jsonl", codebase_to_jsonl(CandidateCodebase(attacked)));
      write_file_atomic(out / "attacks.jsonl", jsonl(meta));
      std::cout << "attacked " << attacked.size() << " snippets with " << spec.label() << " -> " << out.string()
                << "\n";
    } else if (*eval_cmd) {
      auto records = load_records(eval_records);
      auto lines = extraction_lines_from_jsonl(read_file(eval_results));
      std::map<std::string, ExtractionLine> by_id;
      for (auto& l : lines) by_id.emplace(l.snippet_id, l);
      std::optional<CandidateCodebase> marked, originals;
      if (!eval_watermarked.empty()) marked = load_codebase(eval_watermarked);
      if (!eval_codebase.empty()) originals = load_codebase(eval_codebase);
      std::shared_ptr<const TestSuite> tests;
      if (!eval_tests.empty()) tests = std::make_shared<const TestSuite>(TestSuite::load(eval_tests));
      auto config = load_config(g);

      RunArtifacts artifacts;
      for (const auto& rec : records) {
        SnippetArtifact a;
        a.snippet_id = rec.snippet_id;
        a.embedded = rec.bits;
        if (auto it = by_id.find(rec.snippet_id); it != by_id.end()) {
          a.extracted = it->second.bits;
          a.matched_id = it->second.match_id;
        } else {
          std::cerr << "no extraction result for " << rec.snippet_id << "\n";
        }
        if (marked) {
          const auto* wm = marked->find(rec.snippet_id);
          if (!wm) throw Error("watermarked codebase lacks " + rec.snippet_id);
          a.syntax_ok = syntax_check(*wm, config.validators).ok;
          if (tests) a.test = run_tests(*wm, *tests).outcome;
          if (originals) {
            if (const auto* orig = originals->find(rec.snippet_id)) {
              a.similarity = sim_sem(extract_profile(*orig), extract_profile(*wm));
            }
          }
        }
        artifacts.snippets.push_back(std::move(a));
      }
      for (const auto& l : lines) {
        bool known = std::any_of(records.begin(), records.end(),
                                 [&](const WatermarkRecord& r) { return r.snippet_id == l.snippet_id; });
        if (!known) throw Error("result for unknown snippet " + l.snippet_id);
      }
      auto report = build_report(artifacts);
      write_file_atomic(eval_out, report_to_json(report));
      std::cout << report_to_table(report);
    } else if (*pipe_cmd) {
      auto config = load_config(g);
      if (pipe_seed) config.seed = *pipe_seed;
      if (pipe_n) config.n = *pipe_n;
      config.validate();
      auto attack = attack_from_flags(pipe_attack, pipe_p, pipe_k, pipe_attack_seed);
      auto cb = load_codebase(pipe_codebase);
      auto backend = config.make_backend();
      std::shared_ptr<const TestSuite> tests;
      if (!pipe_tests.empty()) {
        tests = std::make_shared<const TestSuite>(TestSuite::load(pipe_tests));
      } else {
        tests = config.load_tests();
      }
      auto run = run_pipeline(config, backend, cb, attack, tests.get());
      write_file_atomic(pipe_out, report_to_json(run.report));
      std::cout << "pipeline: " << cb.size() << " snippets, n=" << config.n << ", seed=" << config.seed
                << ", attack=" << (attack ? attack->label() : std::string("none")) << "\n";
      std::cout << report_to_table(run.report);
    } else if (*tune_cmd) {
      auto cb = load_codebase(tune_codebase);
      std::vector<DevPair> pairs;
      std::istringstream in(read_file(tune_dev));
      std::string line;
      std::size_t no = 0;
      while (std::getline(in, line)) {
        ++no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
          auto j = json::parse(line);
          auto original = j.at("original_id").get<std::string>();
          auto id = j.value("id", original);
          pairs.push_back({CodeSnippet::make(id, parse_language(j.at("language").get<std::string>()),
                                             j.at("text").get<std::string>()),
                           original});
        } catch (const json::exception& e) {
          throw FormatError("dev pairs line " + std::to_string(no) + ": " + e.what());
        }
      }
      auto result = grid_search_weights(pairs, cb);
      save_weights(result.weights, tune_out);
      std::cout << "evaluated " << result.evaluated << " grid points; top-1 accuracy " << result.accuracy
                << ", mean margin " << result.mean_margin << "\n"
                << weights_to_json(result.weights);
    } else if (*check_cmd) {
      auto inputs = load_snippets(check_input);
      for (const auto& s : inputs.snippets()) {
        std::cout << s.id << ":";
        for (const auto& rule : catalog().rules()) {
          if (is_applicable(rule, s)) std::cout << " " << rule.rule_id;
        }
        std::cout << "\n";
      }
    } else if (*export_cmd) {
      auto text = catalog_to_json();
      if (export_out.empty()) {
        std::cout << text;
      } else {
        write_file_atomic(export_out, text);
        std::cout << "wrote " << catalog().rules().size() << " rules -> " << export_out << "\n";
      }
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
