#include "fake_chat_server.hpp"

#include <httplib.h>

#include <mutex>
#include <nlohmann/json.hpp>
#include <optional>

#include "codemark/llm_gateway.hpp"
#include "codemark/rules.hpp"

namespace codemark::testing {

using nlohmann::json;

struct FakeChatServer::Impl {
  httplib::Server server;
  std::thread thread;
  int port = 0;
  mutable std::mutex mu;
  std::string authorization;
};

FakeChatServer::FakeChatServer(Reply reply) : impl_(std::make_unique<Impl>()) {
  impl_->server.Post(".*", [this, reply](const httplib::Request& req, httplib::Response& res) {
    ++calls_;
    {
      std::lock_guard lock(impl_->mu);
      impl_->authorization = req.get_header_value("Authorization");
    }
    auto body = json::parse(req.body);
    auto content = reply(body.at("messages").back().at("content").get<std::string>());
    if (!content) {
      res.status = 500;
      return;
    }
    json out = {{"choices", json::array({{{"message", {{"role", "assistant"}, {"content", *content}}}}})}};
    res.set_content(out.dump(), "application/json");
  });
  impl_->port = impl_->server.bind_to_any_port("127.0.0.1");
  impl_->thread = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
}

FakeChatServer::~FakeChatServer() {
  impl_->server.stop();
  if (impl_->thread.joinable()) impl_->thread.join();
}

std::string FakeChatServer::url() const {
  return "http://127.0.0.1:" + std::to_string(impl_->port) + "/v1/chat/completions";
}

std::string FakeChatServer::last_authorization() const {
  std::lock_guard lock(impl_->mu);
  return impl_->authorization;
}

namespace {

Language fence_language(const std::string& prompt) {
  auto open = prompt.rfind("```", prompt.rfind("```") - 1);
  auto end = prompt.find('\n', open);
  return parse_language(prompt.substr(open + 3, end - open - 3));
}

}  // namespace

std::optional<std::string> rules_engine_reply(const std::string& prompt) {
  if (prompt.find("Role: You review") != std::string::npos) return "YES\nbehavior unchanged";
  auto code = extract_code_block(prompt) + "\n";
  auto lang = fence_language(prompt);
  if (prompt.find("Role: You judge") != std::string::npos) {
    std::string ids;
    for (const auto& rule : catalog().rules()) {
      if (prompt.find("[" + rule.rule_id + "]") == std::string::npos) continue;
      if (is_applicable(rule, code, lang)) ids += rule.rule_id + "\n";
    }
    return ids.empty() ? "none" : ids;
  }
  if (prompt.find("Role: You rewrite") != std::string::npos) {
    for (const auto& rule : catalog().rules()) {
      if (prompt.find("[" + rule.rule_id + "]") == std::string::npos) continue;
      if (!is_applicable(rule, code, lang)) break;
      return "Here it is.\n```" + std::string(to_string(lang)) + "\n" + apply_text(rule, code, lang) + "```\n";
    }
    return "```" + std::string(to_string(lang)) + "\n" + code + "```\n";
  }
  return "```\n" + code + "```\n";
}

}  // namespace codemark::testing
