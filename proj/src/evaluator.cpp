#include "codemark/evaluator.hpp"

#include <fcntl.h>
#include <signal.h>
#include <sys/stat.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>
#include <thread>

#include "codemark/errors.hpp"
#include "codemark/identifiers.hpp"
#include "codemark/io.hpp"
#include "codemark/tokenizer.hpp"

namespace codemark {

using nlohmann::json;

namespace {

void check_pairs(std::span<const BitPair> pairs) {
  if (pairs.empty()) throw InvalidArgument("accuracy of an empty pair list is undefined");
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i].first.size() != pairs[i].second.size()) {
      throw InvalidArgument("bit pair " + std::to_string(i) + " has lengths " +
                            std::to_string(pairs[i].first.size()) + " and " +
                            std::to_string(pairs[i].second.size()));
    }
  }
}

class TempDir {
 public:
  TempDir() {
    auto pattern = (std::filesystem::temp_directory_path() / "codemark-XXXXXX").string();
    if (!::mkdtemp(pattern.data())) throw IoError("cannot create a temporary directory");
    path_ = pattern;
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

struct ProcessResult {
  int exit_code = -1;
  bool timed_out = false;
  std::string output;
};

std::string replace_all(std::string s, std::string_view from, std::string_view to) {
  std::size_t pos = 0;
  while ((pos = s.find(from, pos)) != std::string::npos) {
    s.replace(pos, from.size(), to);
    pos += to.size();
  }
  return s;
}

std::string shell_quote(const std::string& s) { return "'" + replace_all(s, "'", "'\\''") + "'"; }

std::string expand_template(const std::string& tmpl, const std::filesystem::path& file,
                            const std::filesystem::path& dir) {
  auto out = replace_all(tmpl, "{file}", shell_quote(file.string()));
  return replace_all(out, "{dir}", shell_quote(dir.string()));
}

/// Runs `sh -c command` in `dir` in its own process group; the whole group
/// is killed on timeout.
ProcessResult run_shell(const std::string& command, const std::filesystem::path& dir,
                        std::chrono::milliseconds timeout) {
  auto log = (dir / ".codemark-output").string();
  auto dir_str = dir.string();
  pid_t pid = ::fork();
  if (pid < 0) throw IoError("fork failed");
  if (pid == 0) {
    ::setpgid(0, 0);
    if (::chdir(dir_str.c_str()) != 0) ::_exit(127);
    int fd = ::open(log.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0600);
    if (fd >= 0) {
      ::dup2(fd, STDOUT_FILENO);
      ::dup2(fd, STDERR_FILENO);
      ::close(fd);
    }
    int null_fd = ::open("/dev/null", O_RDONLY);
    if (null_fd >= 0) ::dup2(null_fd, STDIN_FILENO);
    ::execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    ::_exit(127);
  }
  ::setpgid(pid, pid);
  ProcessResult r;
  auto deadline = std::chrono::steady_clock::now() + timeout;
  int status = 0;
  while (true) {
    pid_t done = ::waitpid(pid, &status, WNOHANG);
    if (done == pid) break;
    if (done < 0) throw IoError("waitpid failed");
    if (std::chrono::steady_clock::now() >= deadline) {
      ::kill(-pid, SIGKILL);
      ::waitpid(pid, &status, 0);
      r.timed_out = true;
      break;
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(5));
  }
  if (!r.timed_out) r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : 128 + WTERMSIG(status);
  try {
    r.output = read_file(log);
  } catch (const IoError&) {
  }
  if (r.output.size() > 2000) r.output = r.output.substr(r.output.size() - 2000);
  return r;
}

std::string file_name_for(const CodeSnippet& snippet) {
  auto name = std::filesystem::path(snippet.id).filename().string();
  if (!name.empty() && name.find('.') != std::string::npos) return name;
  switch (snippet.language) {
    case Language::c: return "snippet.c";
    case Language::cpp: return "snippet.cpp";
    case Language::java: return "Main.java";
    case Language::javascript: return "snippet.js";
    case Language::python: return "snippet.py";
    case Language::unknown: break;
  }
  return "snippet.txt";
}

SyntaxResult builtin_syntax(const CodeSnippet& snippet) {
  auto tokens = tokenize(snippet.text, snippet.language);
  std::vector<char> stack;
  for (const auto& t : tokens) {
    if (t.unterminated) return {false, "unterminated literal or comment"};
    if (t.kind != TokenKind::op || t.text.size() != 1) continue;
    char c = t.text[0];
    if (c == '(' || c == '[' || c == '{') {
      stack.push_back(c);
    } else if (c == ')' || c == ']' || c == '}') {
      char want = c == ')' ? '(' : c == ']' ? '[' : '{';
      if (stack.empty() || stack.back() != want) return {false, std::string("unbalanced '") + c + "'"};
      stack.pop_back();
    }
  }
  if (!stack.empty()) return {false, std::string("unclosed '") + stack.back() + "'"};
  return {true, ""};
}

}  // namespace

double bit_acc(std::span<const BitPair> pairs) {
  check_pairs(pairs);
  std::size_t total = 0, matched = 0;
  for (const auto& [w, w_hat] : pairs) {
    for (std::size_t k = 0; k < w.size(); ++k) matched += w[k] == w_hat[k];
    total += w.size();
  }
  return static_cast<double>(matched) / static_cast<double>(total);
}

double msg_acc(std::span<const BitPair> pairs) {
  check_pairs(pairs);
  auto exact = std::count_if(pairs.begin(), pairs.end(), [](const BitPair& p) { return p.first == p.second; });
  return static_cast<double>(exact) / static_cast<double>(pairs.size());
}

bool program_available(const std::string& command) {
  std::istringstream in(command);
  std::string word;
  in >> word;
  if (word.empty()) return false;
  if (word.find('/') != std::string::npos) return ::access(word.c_str(), X_OK) == 0;
  const char* path = std::getenv("PATH");
  if (!path) return false;
  std::stringstream dirs(path);
  std::string dir;
  while (std::getline(dirs, dir, ':')) {
    if (dir.empty()) continue;
    auto candidate = std::filesystem::path(dir) / word;
    if (::access(candidate.c_str(), X_OK) == 0) return true;
  }
  return false;
}

SyntaxResult syntax_check(const CodeSnippet& snippet, const std::map<Language, std::string>& validators) {
  auto it = validators.find(snippet.language);
  if (it == validators.end()) return builtin_syntax(snippet);
  if (!program_available(it->second)) {
    auto r = builtin_syntax(snippet);
    r.notes += (r.notes.empty() ? "" : "; ") + std::string("validator unavailable, built-in check used");
    return r;
  }
  TempDir dir;
  auto file = dir.path() / file_name_for(snippet);
  write_file_atomic(file, snippet.text);
  auto pr = run_shell(expand_template(it->second, file, dir.path()), dir.path(), std::chrono::seconds(20));
  if (pr.timed_out) return {false, "validator timed out"};
  return {pr.exit_code == 0, pr.exit_code == 0 ? "" : pr.output};
}

TestSuite TestSuite::load(const std::filesystem::path& path) {
  TestSuite suite;
  try {
    auto j = json::parse(read_file(path));
    auto base = path.parent_path();
    for (const auto& [tag, cmd] : j.at("commands").items()) {
      suite.commands[parse_language(tag)] = cmd.get<std::string>();
    }
    std::filesystem::path harness = j.value("harness_dir", std::string("harness"));
    suite.harness_dir = harness.is_absolute() ? harness : base / harness;
    auto seconds = j.value("timeout_seconds", 20);
    if (seconds <= 0) throw InvalidArgument("timeout_seconds must be positive");
    suite.timeout = std::chrono::seconds(seconds);
  } catch (const json::exception& e) {
    throw FormatError("invalid test suite " + path.string() + ": " + e.what());
  }
  return suite;
}

TestResult run_tests(const CodeSnippet& snippet, const TestSuite& suite) {
  auto cmd = suite.commands.find(snippet.language);
  if (cmd == suite.commands.end()) return {TestOutcome::skipped, "no test command for language"};
  auto harness_path = suite.harness_dir / snippet.id;
  if (!std::filesystem::is_regular_file(harness_path)) return {TestOutcome::skipped, "no harness"};
  if (!program_available(cmd->second)) return {TestOutcome::skipped, "runtime not installed"};

  auto harness = read_file(harness_path);
  if (harness.find("@@FUNCTION@@") == std::string::npos) {
    throw FormatError("harness " + harness_path.string() + " lacks the @@FUNCTION@@ marker");
  }
  auto fn = analyze_identifiers(tokenize(snippet.text, snippet.language)).fn_name;
  auto program = replace_all(replace_all(harness, "@FN@", fn), "@@FUNCTION@@", snippet.text);

  TempDir dir;
  auto file = dir.path() / file_name_for(snippet);
  write_file_atomic(file, program);
  auto pr = run_shell(expand_template(cmd->second, file, dir.path()), dir.path(), suite.timeout);
  if (pr.timed_out) return {TestOutcome::fail, "timed out after " + std::to_string(suite.timeout.count()) + " s"};
  if (pr.exit_code != 0) {
    return {TestOutcome::fail, "exit status " + std::to_string(pr.exit_code) + ": " + pr.output};
  }
  return {TestOutcome::pass, ""};
}

MetricReport build_report(const RunArtifacts& artifacts) {
  if (artifacts.snippets.empty()) throw InvalidArgument("report needs at least one embedded snippet");
  std::set<std::string> ids;
  for (const auto& s : artifacts.snippets) {
    if (s.snippet_id.empty()) throw InvalidArgument("artifact without a snippet id");
    if (!ids.insert(s.snippet_id).second) throw InvalidArgument("duplicate artifact for " + s.snippet_id);
  }

  MetricReport r;
  std::vector<BitPair> pairs;
  std::size_t embedded_bits = 0, syntax_ok = 0, passed = 0, failed = 0, retrieved = 0, extract_failures = 0;
  double sim_total = 0;
  for (const auto& s : artifacts.snippets) {
    embedded_bits += s.embedded.size();
    if (s.extracted) {
      if (s.extracted->size() != s.embedded.size()) {
        throw InvalidArgument("extracted length differs from embedded length for " + s.snippet_id);
      }
      pairs.emplace_back(s.embedded, *s.extracted);
    } else {
      // A failed extraction recovers nothing: every bit counts as wrong.
      std::vector<std::uint8_t> flipped;
      for (auto b : s.embedded.values()) flipped.push_back(b ? 0 : 1);
      pairs.emplace_back(s.embedded, WatermarkBits(flipped));
      ++extract_failures;
    }
    syntax_ok += s.syntax_ok;
    if (s.test == TestOutcome::pass) ++passed;
    if (s.test == TestOutcome::fail) ++failed;
    if (s.test == TestOutcome::skipped) ++r.pass_skipped;
    retrieved += s.matched_id == s.snippet_id;
    sim_total += s.similarity;
  }
  double n = static_cast<double>(artifacts.snippets.size());
  r.bit_acc = bit_acc(pairs);
  r.msg_acc = msg_acc(pairs);
  r.bpf = static_cast<double>(embedded_bits) / n;
  r.syntax_rate = static_cast<double>(syntax_ok) / n;
  if (passed + failed > 0) r.pass_rate = static_cast<double>(passed) / static_cast<double>(passed + failed);
  r.sim_degradation = sim_total / n;
  r.n_snippets = artifacts.snippets.size() + artifacts.embed_failures;
  r.n_failures = artifacts.embed_failures + extract_failures;
  r.retrieval_acc = static_cast<double>(retrieved) / n;
  return r;
}

std::string report_to_json(const MetricReport& r) {
  json j = {{"bit_acc", r.bit_acc},
            {"msg_acc", r.msg_acc},
            {"bpf", r.bpf},
            {"syntax_rate", r.syntax_rate},
            {"pass_rate", r.pass_rate ? json(*r.pass_rate) : json(nullptr)},
            {"pass_skipped", r.pass_skipped},
            {"sim_degradation", r.sim_degradation},
            {"n_snippets", r.n_snippets},
            {"n_failures", r.n_failures},
            {"retrieval_acc", r.retrieval_acc}};
  return j.dump(2) + "\n";
}

std::string report_to_table(const MetricReport& r) {
  auto pct = [](double v) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(2) << v * 100.0 << "%";
    return s.str();
  };
  std::vector<std::pair<std::string, std::string>> rows = {
      {"BitAcc", pct(r.bit_acc)},
      {"MsgAcc", pct(r.msg_acc)},
      {"BPF", [&] {
         std::ostringstream s;
         s << std::fixed << std::setprecision(2) << r.bpf;
         return s.str();
       }()},
      {"Syntax valid", pct(r.syntax_rate)},
      {"Tests passed", r.pass_rate ? pct(*r.pass_rate) : std::string("n/a")},
      {"Tests skipped", std::to_string(r.pass_skipped)},
      {"Mean sim_sem vs original", [&] {
         std::ostringstream s;
         s << std::fixed << std::setprecision(4) << r.sim_degradation;
         return s.str();
       }()},
      {"Retrieval top-1", pct(r.retrieval_acc)},
      {"Snippets", std::to_string(r.n_snippets)},
      {"Failures", std::to_string(r.n_failures)},
  };
  std::size_t width = 0;
  for (const auto& row : rows) width = std::max(width, row.first.size());
  std::ostringstream out;
  for (const auto& [k, v] : rows) out << std::left << std::setw(static_cast<int>(width) + 2) << k << v << "\n";
  return out.str();
}

}  // namespace codemark
