#pragma once

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "codemark/bits.hpp"
#include "codemark/corpus.hpp"

namespace codemark {

using BitPair = std::pair<WatermarkBits, WatermarkBits>;

/// Matched bits over all bits. Throws InvalidArgument on an empty list or a
/// length mismatch (naming the pair index).
double bit_acc(std::span<const BitPair> pairs);
/// Fraction of pairs recovered exactly.
double msg_acc(std::span<const BitPair> pairs);

struct SyntaxResult {
  bool ok = false;
  std::string notes;
};

/// Built-in check: the text lexes without unterminated literals or comments
/// and its brackets balance and nest. A configured validator command
/// (template with {file}) overrides it when its program is installed.
SyntaxResult syntax_check(const CodeSnippet& snippet,
                          const std::map<Language, std::string>& validators = {});

/// Per-language test commands. Templates may use {file} (the written
/// program) and {dir} (its private workspace).
struct TestSuite {
  std::map<Language, std::string> commands;
  /// Harness files mirror snippet ids below this directory. A harness holds
  /// a line containing @@FUNCTION@@ (replaced by the snippet) and may use
  /// @FN@ for the snippet's current function name.
  std::filesystem::path harness_dir;
  std::chrono::seconds timeout{20};

  /// Loads {"commands": {lang: template}, "harness_dir": path,
  /// "timeout_seconds": n}; relative paths resolve against the file's folder.
  static TestSuite load(const std::filesystem::path& path);
};

enum class TestOutcome { pass, fail, skipped };

struct TestResult {
  TestOutcome outcome = TestOutcome::skipped;
  std::string reason;
};

/// Skipped when no command or harness exists for the snippet or the
/// command's program is not installed.
TestResult run_tests(const CodeSnippet& snippet, const TestSuite& suite);

/// First word of a command line is an executable on PATH.
bool program_available(const std::string& command);

struct SnippetArtifact {
  std::string snippet_id;
  WatermarkBits embedded = WatermarkBits::zeros(1);
  std::optional<WatermarkBits> extracted;
  std::string matched_id;
  bool syntax_ok = true;
  /// Absent when tests were not run for this snippet.
  std::optional<TestOutcome> test;
  /// sim_sem(original, final text).
  double similarity = 1.0;
};

struct RunArtifacts {
  std::vector<SnippetArtifact> snippets;
  std::size_t embed_failures = 0;
  std::size_t bits_per_snippet = 4;
};

struct MetricReport {
  double bit_acc = 0;
  double msg_acc = 0;
  double bpf = 0;
  double syntax_rate = 0;
  std::optional<double> pass_rate;
  std::size_t pass_skipped = 0;
  double sim_degradation = 0;
  std::size_t n_snippets = 0;
  /// Embedding failures plus snippets with no extraction result.
  std::size_t n_failures = 0;
  double retrieval_acc = 0;
};

/// Throws InvalidArgument when there is nothing to report.
MetricReport build_report(const RunArtifacts& artifacts);
std::string report_to_json(const MetricReport& report);
std::string report_to_table(const MetricReport& report);

}  // namespace codemark
