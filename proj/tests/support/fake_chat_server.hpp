#pragma once

#include <atomic>
#include <functional>
#include <optional>
#include <memory>
#include <string>
#include <thread>

namespace codemark::testing {

/// Local chat-completion endpoint. `reply` maps the user message to the
/// completion content; returning std::nullopt answers HTTP 500.
class FakeChatServer {
 public:
  using Reply = std::function<std::optional<std::string>(const std::string& prompt)>;

  explicit FakeChatServer(Reply reply);
  ~FakeChatServer();
  FakeChatServer(const FakeChatServer&) = delete;
  FakeChatServer& operator=(const FakeChatServer&) = delete;

  std::string url() const;
  int calls() const { return calls_.load(); }
  /// Authorization header of the last request.
  std::string last_authorization() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  std::atomic<int> calls_{0};
};

/// A reply function that behaves like a careful model by delegating to the
/// rules engine: rewrites with the requested rule, ranks applicable rules and
/// always answers YES to verification.
std::optional<std::string> rules_engine_reply(const std::string& prompt);

}  // namespace codemark::testing
