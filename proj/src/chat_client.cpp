#include <atomic>
#include <chrono>
#include <httplib.h>
#include <mutex>
#include <nlohmann/json.hpp>
#include <semaphore>
#include <thread>

#include "codemark/errors.hpp"
#include "codemark/llm_gateway.hpp"

namespace codemark {

using nlohmann::json;

namespace {

struct Endpoint {
  std::string origin;
  std::string path;
};

Endpoint split_url(const std::string& url) {
  auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) throw InvalidArgument("endpoint_url needs a scheme: " + url);
  auto scheme = url.substr(0, scheme_end);
  if (scheme != "http" && scheme != "https") throw InvalidArgument("unsupported endpoint scheme: " + scheme);
  auto path_start = url.find('/', scheme_end + 3);
  Endpoint e;
  e.origin = url.substr(0, path_start);
  e.path = path_start == std::string::npos ? "/" : url.substr(path_start);
  if (e.origin.size() <= scheme_end + 3) throw InvalidArgument("endpoint_url has no host: " + url);
  return e;
}

}  // namespace

void ProviderConfig::validate() const {
  if (endpoint_url.empty()) throw InvalidArgument("endpoint_url is required");
  split_url(endpoint_url);
  if (model_name.empty()) throw InvalidArgument("model_name is required");
  if (api_key_env.empty()) throw InvalidArgument("api_key_env is required");
  if (!(temperature >= 0.0 && temperature <= 2.0)) throw InvalidArgument("temperature must lie in [0, 2]");
  if (!(timeout_seconds > 0)) throw InvalidArgument("timeout must be positive");
  if (max_retries < 0) throw InvalidArgument("max_retries must be non-negative");
  if (requests_per_minute < 0) throw InvalidArgument("requests_per_minute must be non-negative");
  if (max_in_flight < 1 || max_in_flight > 256) throw InvalidArgument("max_in_flight must lie in [1, 256]");
}

struct ChatClient::State {
  explicit State(int in_flight) : slots(in_flight) {}

  std::mutex mu;
  std::chrono::steady_clock::time_point next_slot = std::chrono::steady_clock::now();
  std::counting_semaphore<256> slots;
  std::atomic<std::size_t> requests{0};
};

ChatClient::ChatClient(ProviderConfig config, std::string api_key)
    : config_(std::move(config)), api_key_(std::move(api_key)) {
  config_.validate();
  state_ = std::make_unique<State>(config_.max_in_flight);
}

ChatClient::~ChatClient() = default;

std::size_t ChatClient::request_count() const { return state_->requests.load(); }

std::string ChatClient::complete(const std::vector<ChatMessage>& messages) {
  if (config_.requests_per_minute > 0) {
    auto interval = std::chrono::duration_cast<std::chrono::steady_clock::duration>(
        std::chrono::duration<double>(60.0 / config_.requests_per_minute));
    std::chrono::steady_clock::time_point slot;
    {
      std::lock_guard lock(state_->mu);
      slot = std::max(state_->next_slot, std::chrono::steady_clock::now());
      state_->next_slot = slot + interval;
    }
    std::this_thread::sleep_until(slot);
  }

  state_->slots.acquire();
  struct Release {
    std::counting_semaphore<256>& s;
    ~Release() { s.release(); }
  } release{state_->slots};

  auto endpoint = split_url(config_.endpoint_url);
  json body = {{"model", config_.model_name}, {"temperature", config_.temperature}, {"messages", json::array()}};
  for (const auto& m : messages) body["messages"].push_back({{"role", m.role}, {"content", m.content}});

  ++state_->requests;
  httplib::Result res;
  try {
    httplib::Client client(endpoint.origin);
    auto t = std::chrono::duration<double>(config_.timeout_seconds);
    auto secs = static_cast<time_t>(t.count());
    auto usecs = static_cast<time_t>((t.count() - static_cast<double>(secs)) * 1e6);
    client.set_connection_timeout(secs, usecs);
    client.set_read_timeout(secs, usecs);
    client.set_write_timeout(secs, usecs);
    httplib::Headers headers = {{"Authorization", "Bearer " + api_key_}};
    res = client.Post(endpoint.path, headers, body.dump(), "application/json");
  } catch (const std::exception& e) {
    throw NetworkError("request to " + config_.endpoint_url + " failed: " + e.what());
  }
  if (!res) {
    throw NetworkError("request to " + config_.endpoint_url + " failed: " + httplib::to_string(res.error()));
  }
  if (res->status < 200 || res->status >= 300) {
    throw NetworkError("request to " + config_.endpoint_url + " returned HTTP " + std::to_string(res->status));
  }
  try {
    auto reply = json::parse(res->body);
    return reply.at("choices").at(0).at("message").at("content").get<std::string>();
  } catch (const json::exception& e) {
    throw ParseError("malformed completion from " + config_.endpoint_url + ": " + e.what());
  }
}

}  // namespace codemark
