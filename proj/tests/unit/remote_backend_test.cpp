#include <gtest/gtest.h>

#include <chrono>
#include <cstdlib>

#include "codemark/embedder.hpp"
#include "codemark/errors.hpp"
#include "codemark/extractor.hpp"
#include "codemark/rules.hpp"
#include "fake_chat_server.hpp"
#include "test_support.hpp"

using namespace codemark;
using codemark::testing::FakeChatServer;

namespace {

constexpr const char* kKeyVar = "CODEMARK_TEST_KEY";

ProviderConfig provider(const std::string& url, int retries = 3) {
  ProviderConfig c;
  c.endpoint_url = url;
  c.model_name = "fake-model";
  c.api_key_env = kKeyVar;
  c.max_retries = retries;
  c.requests_per_minute = 0;
  c.timeout_seconds = 5;
  return c;
}

class RemoteBackend : public ::testing::Test {
 protected:
  void SetUp() override { setenv(kKeyVar, "test-secret", 1); }
  void TearDown() override { unsetenv(kKeyVar); }
};

CodeSnippet camel() { return CodeSnippet::make("t.c", Language::c, "int readBlock(int blockSize) { return blockSize; }\n"); }

}  // namespace

TEST_F(RemoteBackend, MissingCredentialIsReported) {
  unsetenv(kKeyVar);
  EXPECT_THROW(Backend::remote(provider("http://127.0.0.1:9/x")), CredentialError);
}

TEST_F(RemoteBackend, SendsBearerKeyAndParsesRewrite) {
  FakeChatServer server(codemark::testing::rules_engine_reply);
  auto backend = Backend::remote(provider(server.url()));
  EXPECT_EQ(backend.tag(), "remote:fake-model");
  auto v = backend.transform(camel(), catalog().at("naming.camel_to_snake"));
  EXPECT_TRUE(v.rule_confirmed);
  EXPECT_EQ(v.output_text, "int read_block(int block_size) { return block_size; }\n");
  EXPECT_EQ(server.last_authorization(), "Bearer test-secret");
  EXPECT_EQ(backend.request_count(), 1u);
}

TEST_F(RemoteBackend, UnchangedReplyIsNotConfirmed) {
  FakeChatServer server([](const std::string& prompt) -> std::optional<std::string> {
    return "```c\n" + extract_code_block(prompt) + "\n```";
  });
  auto backend = Backend::remote(provider(server.url()));
  EXPECT_FALSE(backend.transform(camel(), catalog().at("naming.camel_to_snake")).rule_confirmed);
}

TEST_F(RemoteBackend, RetriesAreCappedForServerErrors) {
  FakeChatServer server([](const std::string&) -> std::optional<std::string> { return std::nullopt; });
  auto backend = Backend::remote(provider(server.url(), 2));
  EXPECT_THROW(backend.transform(camel(), catalog().at("naming.camel_to_snake")), NetworkError);
  EXPECT_EQ(server.calls(), 3);
}

TEST_F(RemoteBackend, RetriesAreCappedForUnparsableReplies) {
  FakeChatServer server([](const std::string&) -> std::optional<std::string> { return "I would rather not."; });
  auto backend = Backend::remote(provider(server.url(), 1));
  EXPECT_THROW(backend.transform(camel(), catalog().at("naming.camel_to_snake")), ParseError);
  EXPECT_EQ(server.calls(), 2);
}

TEST_F(RemoteBackend, RecoversWithinRetryBudget) {
  std::atomic<int> seen{0};
  FakeChatServer server([&seen](const std::string& prompt) -> std::optional<std::string> {
    if (++seen < 3) return std::nullopt;
    return codemark::testing::rules_engine_reply(prompt);
  });
  auto backend = Backend::remote(provider(server.url(), 3));
  EXPECT_TRUE(backend.transform(camel(), catalog().at("naming.camel_to_snake")).rule_confirmed);
  EXPECT_EQ(server.calls(), 3);
}

TEST_F(RemoteBackend, UnreachableEndpointNamesIt) {
  std::string url;
  {
    FakeChatServer server(codemark::testing::rules_engine_reply);
    url = server.url();
  }
  auto backend = Backend::remote(provider(url, 0));
  try {
    backend.transform(camel(), catalog().at("naming.camel_to_snake"));
    FAIL() << "expected NetworkError";
  } catch (const NetworkError& e) {
    EXPECT_NE(std::string(e.what()).find(url), std::string::npos) << e.what();
  }
}

TEST_F(RemoteBackend, ClientReturnsMessageContent) {
  FakeChatServer server([](const std::string&) -> std::optional<std::string> { return "```c\nx\n```"; });
  ChatClient client(provider(server.url()), "k");
  EXPECT_EQ(client.complete({{"user", "hi"}}), "```c\nx\n```");
}

TEST_F(RemoteBackend, RankRefiltersDeterministicRules) {
  FakeChatServer server([](const std::string&) -> std::optional<std::string> {
    return "organization.split_decl\norganization.add_braces\nloops.while_to_do_while";
  });
  auto backend = Backend::remote(provider(server.url()));
  auto s = CodeSnippet::make("b.c", Language::c, "int f(int a) {\n  if (a) return 1;\n  return 0;\n}\n");
  auto ranked = backend.rank_rules(s, Category::organization);
  ASSERT_EQ(ranked.size(), 1u);
  EXPECT_EQ(ranked[0]->rule_id, "organization.add_braces");
}

TEST_F(RemoteBackend, VerifyAsksForVerdictAfterStructuralCheck) {
  std::atomic<bool> answer_yes{false};
  FakeChatServer server([&](const std::string&) -> std::optional<std::string> {
    return answer_yes ? "YES" : "NO: the result differs";
  });
  auto backend = Backend::remote(provider(server.url()));
  auto s = camel();
  auto renamed = s.with_text("int read_block(int block_size) { return block_size; }\n");
  EXPECT_FALSE(backend.verify_semantics(s, renamed));
  answer_yes = true;
  EXPECT_TRUE(backend.verify_semantics(s, renamed));
  int before = server.calls();
  EXPECT_FALSE(backend.verify_semantics(s, s.with_text("int readBlock(int blockSize) { return blockSize; \n")));
  EXPECT_EQ(server.calls(), before);
}

TEST_F(RemoteBackend, ParaphraseReturnsReplyVerbatim) {
  FakeChatServer server([](const std::string&) -> std::optional<std::string> {
    return "Sure.\n```c\nint other(int v) { return v; }\n```\n";
  });
  auto backend = Backend::remote(provider(server.url()));
  EXPECT_EQ(backend.paraphrase(camel()), "int other(int v) { return v; }\n");
}

TEST_F(RemoteBackend, RateLimitSpacesRequests) {
  FakeChatServer server(codemark::testing::rules_engine_reply);
  auto config = provider(server.url());
  config.requests_per_minute = 600;
  ChatClient client(config, "k");
  auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < 3; ++i) client.complete({{"user", "```c\nint x;\n```"}});
  EXPECT_GE(std::chrono::steady_clock::now() - start, std::chrono::milliseconds(190));
  EXPECT_EQ(client.request_count(), 3u);
}

TEST_F(RemoteBackend, EmbedAndExtractRoundTrip) {
  FakeChatServer server(codemark::testing::rules_engine_reply);
  auto backend = Backend::remote(provider(server.url()));
  const auto& cb = codemark::testing::bundled_corpus();
  CodebaseIndex index(cb);
  for (auto id : {"c/binary_search.c", "python/sum_of_squares.py", "javascript/title_case.js"}) {
    const auto& s = cb.at(id);
    for (auto bits : {"1011", "0110"}) {
      auto outcome = embed(backend, s, WatermarkBits::parse(bits));
      ASSERT_TRUE(outcome.success) << id << ": " << outcome.error;
      EXPECT_EQ(outcome.record.backend, "remote:fake-model");
      auto result = extract(backend, outcome.require(), index, SimilarityWeights{}, 4);
      EXPECT_EQ(result.retrieval.match.id, id);
      EXPECT_EQ(result.bits.str(), bits) << id;
    }
  }
}
