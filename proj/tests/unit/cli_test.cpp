#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "codemark/io.hpp"
#include "test_support.hpp"

using codemark::testing::corpus_dir;
using codemark::testing::TempDir;
using codemark::testing::write_text;
using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run cli(const std::string& args) {
  std::string cmd = std::string("'") + CODEMARK_CLI_PATH + "' " + args + " 2>&1";
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string q(const std::filesystem::path& p) { return "'" + p.string() + "'"; }

std::vector<json> read_jsonl(const std::filesystem::path& p) {
  std::vector<json> out;
  std::istringstream in(codemark::read_file(p));
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) out.push_back(json::parse(line));
  }
  return out;
}

/// Three Python fixtures copied into a fresh tree.
void small_tree(const TempDir& dir) {
  for (const char* name : {"sum_of_squares.py", "count_evens.py", "clip_values.py"}) {
    std::filesystem::create_directories(dir / "src");
    std::filesystem::copy_file(corpus_dir() / "functions/python" / name, dir / "src" / name);
  }
}

}  // namespace

TEST(Cli, BadArgumentsExitTwo) {
  EXPECT_EQ(cli("").code, 2);
  EXPECT_EQ(cli("frobnicate").code, 2);
  EXPECT_EQ(cli("embed -o /tmp/x").code, 2);
  EXPECT_EQ(cli("--backend cloud rules export").code, 2);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(cli("--help").code, 0); }

TEST(Cli, BitsLengthMismatchIsUsageError) {
  TempDir dir;
  small_tree(dir);
  ASSERT_EQ(cli("ingest " + q(dir / "src") + " -o " + q(dir / "cb.jsonl")).code, 0);
  auto r = cli("embed -c " + q(dir / "cb.jsonl") + " --bits 101 --n 4 -o " + q(dir / "out"));
  EXPECT_EQ(r.code, 2) << r.out;
  EXPECT_NE(r.out.find("3 bits"), std::string::npos) << r.out;
}

TEST(Cli, MissingCodebaseExitsOne) {
  TempDir dir;
  auto r = cli("embed -c " + q(dir / "absent.jsonl") + " --bits 1010 -o " + q(dir / "out"));
  EXPECT_EQ(r.code, 1) << r.out;
}

TEST(Cli, IngestEmbedExtractEvalRoundTrip) {
  TempDir dir;
  small_tree(dir);
  auto r = cli("ingest " + q(dir / "src") + " -o " + q(dir / "cb.jsonl"));
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(read_jsonl(dir / "cb.jsonl").size(), 3u);

  r = cli("embed -c " + q(dir / "cb.jsonl") + " --bits 1011 -o " + q(dir / "wm"));
  ASSERT_EQ(r.code, 0) << r.out;
  auto records = read_jsonl(dir / "wm/records.jsonl");
  ASSERT_EQ(records.size(), 3u);
  for (const auto& rec : records) EXPECT_EQ(rec.at("bits"), "1011");
  EXPECT_EQ(read_jsonl(dir / "wm/status.jsonl").size(), 3u);
  EXPECT_TRUE(std::filesystem::exists(dir / "wm/snippets"));

  r = cli("extract -c " + q(dir / "cb.jsonl") + " -i " + q(dir / "wm/watermarked.jsonl") + " -o " +
          q(dir / "results.jsonl"));
  ASSERT_EQ(r.code, 0) << r.out;
  for (const auto& line : read_jsonl(dir / "results.jsonl")) {
    EXPECT_EQ(line.at("bits"), "1011");
    EXPECT_EQ(line.at("match_id"), line.at("snippet_id"));
  }

  r = cli("eval --records " + q(dir / "wm/records.jsonl") + " --results " + q(dir / "results.jsonl") +
          " --watermarked " + q(dir / "wm/watermarked.jsonl") + " -c " + q(dir / "cb.jsonl") + " --tests " +
          q(corpus_dir() / "tests.json") + " -o " + q(dir / "report.json"));
  ASSERT_EQ(r.code, 0) << r.out;
  auto report = json::parse(codemark::read_file(dir / "report.json"));
  EXPECT_DOUBLE_EQ(report.at("bit_acc").get<double>(), 1.0);
  EXPECT_DOUBLE_EQ(report.at("msg_acc").get<double>(), 1.0);
  EXPECT_EQ(report.at("n_snippets").get<int>(), 3);
}

TEST(Cli, AttackWritesMetadata) {
  TempDir dir;
  small_tree(dir);
  auto r = cli("attack -i " + q(dir / "src") + " --kind rename --p 1.0 --seed 3 -o " + q(dir / "att"));
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(read_jsonl(dir / "att/attacks.jsonl").size(), 3u);
  EXPECT_EQ(read_jsonl(dir / "att/attacked.jsonl").size(), 3u);
  EXPECT_EQ(cli("attack -i " + q(dir / "src") + " --kind rename --p 1.5 -o " + q(dir / "bad")).code, 2);
}

TEST(Cli, PipelineReportIsPerfectWithoutAttack) {
  TempDir dir;
  small_tree(dir);
  ASSERT_EQ(cli("ingest " + q(dir / "src") + " -o " + q(dir / "cb.jsonl")).code, 0);
  auto r = cli("pipeline -c " + q(dir / "cb.jsonl") + " --seed 42 -o " + q(dir / "report.json"));
  ASSERT_EQ(r.code, 0) << r.out;
  auto report = json::parse(codemark::read_file(dir / "report.json"));
  EXPECT_DOUBLE_EQ(report.at("bit_acc").get<double>(), 1.0);
  EXPECT_DOUBLE_EQ(report.at("retrieval_acc").get<double>(), 1.0);
}

TEST(Cli, RulesExportListsCatalog) {
  auto r = cli("rules export");
  ASSERT_EQ(r.code, 0) << r.out;
  auto arr = json::parse(r.out);
  ASSERT_EQ(arr.size(), 29u);
  EXPECT_TRUE(arr[0].contains("rule_id"));
  EXPECT_TRUE(arr[0].contains("deterministic"));
}

TEST(Cli, RulesCheckNamesApplicableRules) {
  auto r = cli("rules check -i " + q(corpus_dir() / "functions/python/sum_of_squares.py"));
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("sum_of_squares.py:"), std::string::npos);
  EXPECT_NE(r.out.find("for_to_while"), std::string::npos) << r.out;
}

TEST(Cli, ConfigWithApiKeyIsRejected) {
  TempDir dir;
  write_text(dir / "run.json", R"({"api_key": "sk-x"})");
  small_tree(dir);
  auto r = cli("--config " + q(dir / "run.json") + " attack -i " + q(dir / "src") + " --kind rename -o " +
               q(dir / "att"));
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("environment"), std::string::npos) << r.out;
}
