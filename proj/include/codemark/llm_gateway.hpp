#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "codemark/bits.hpp"
#include "codemark/corpus.hpp"
#include "codemark/errors.hpp"
#include "codemark/rules.hpp"

namespace codemark {

struct TestSuite;

struct ProviderConfig {
  std::string endpoint_url;
  std::string model_name;
  std::string api_key_env = "CODEMARK_API_KEY";
  double temperature = 0.0;
  double timeout_seconds = 60.0;
  int max_retries = 3;
  /// Token-bucket rate; 0 disables the limiter.
  double requests_per_minute = 60.0;
  int max_in_flight = 4;

  void validate() const;
};

struct ChatMessage {
  std::string role;
  std::string content;
};

/// Minimal chat-completion client: one POST per attempt, shared rate limit,
/// bounded in-flight requests.
class ChatClient {
 public:
  ChatClient(ProviderConfig config, std::string api_key);
  ~ChatClient();
  ChatClient(const ChatClient&) = delete;
  ChatClient& operator=(const ChatClient&) = delete;

  /// One request; returns choices[0].message.content. Throws NetworkError.
  std::string complete(const std::vector<ChatMessage>& messages);

  /// Retries transport failures and replies that `parse` rejects with
  /// ParseError, at most max_retries extra attempts.
  template <typename Parse>
  auto complete_parsed(const std::vector<ChatMessage>& messages, Parse&& parse);

  std::size_t request_count() const;
  const ProviderConfig& config() const { return config_; }

 private:
  struct State;
  ProviderConfig config_;
  std::string api_key_;
  std::unique_ptr<State> state_;
};

/// Body of the last fenced code block in a reply. Throws ParseError.
std::string extract_code_block(std::string_view reply);

inline constexpr std::string_view kPromptVersion = "codemark-prompts/1";

/// Throws InvalidArgument when the rule list is empty or its length differs
/// from the bit count.
std::string render_embed_prompt(const CodeSnippet& snippet, const WatermarkBits& bits,
                                const std::vector<const TransformationRule*>& sub_rules);
/// Throws InvalidArgument when the rule list is empty.
std::string render_extract_prompt(const CodeSnippet& original, const CodeSnippet& watermarked,
                                  const std::vector<const TransformationRule*>& sub_rules);
std::string render_rank_prompt(const CodeSnippet& snippet, Category category);
std::string render_verify_prompt(const CodeSnippet& before, const CodeSnippet& after);
std::string render_paraphrase_prompt(const CodeSnippet& snippet);

/// Rule ids of `category` named in a ranking reply, in reply order.
std::vector<const TransformationRule*> parse_rank_reply(std::string_view reply, Category category);
/// YES/NO verdict; throws ParseError when neither is present.
bool parse_verdict(std::string_view reply);

struct TransformVerdict {
  std::string output_text;
  bool rule_confirmed = false;
  std::string notes;
};

/// Either the offline rules engine (mock) or a remote chat model.
class Backend {
 public:
  /// Offline backend. With a test suite, verify_semantics also runs the
  /// snippet's harness.
  static Backend mock(std::shared_ptr<const TestSuite> tests = nullptr);
  /// Reads the API key from config.api_key_env; throws CredentialError when unset.
  static Backend remote(ProviderConfig config);

  bool is_mock() const { return client_ == nullptr; }
  /// "mock" or "remote:<model>".
  std::string tag() const;
  std::size_t request_count() const;

  TransformVerdict transform(const CodeSnippet& snippet, const TransformationRule& rule) const;
  /// Best-first applicable rules of one category.
  std::vector<const TransformationRule*> rank_rules(const CodeSnippet& snippet, Category category) const;
  bool verify_semantics(const CodeSnippet& before, const CodeSnippet& after,
                        std::string* notes = nullptr) const;
  /// Remote only; the mock backend throws MockUnsupported.
  std::string paraphrase(const CodeSnippet& snippet) const;

 private:
  std::shared_ptr<const TestSuite> tests_;
  std::shared_ptr<ChatClient> client_;
};

/// Structural part of the mock semantic check: the result still lexes,
/// brackets balance and nest, and literals and comments are unchanged.
bool structurally_equivalent(const CodeSnippet& before, const CodeSnippet& after, std::string* why = nullptr);

// ---------------------------------------------------------------------------

template <typename Parse>
auto ChatClient::complete_parsed(const std::vector<ChatMessage>& messages, Parse&& parse) {
  int attempt = 0;
  while (true) {
    try {
      return parse(complete(messages));
    } catch (const Error& e) {
      bool retryable = dynamic_cast<const NetworkError*>(&e) || dynamic_cast<const ParseError*>(&e);
      if (!retryable || attempt >= config_.max_retries) throw;
      ++attempt;
    }
  }
}

}  // namespace codemark
