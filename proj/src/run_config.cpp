#include "codemark/run_config.hpp"

#include <nlohmann/json.hpp>

#include "codemark/errors.hpp"
#include "codemark/io.hpp"

namespace codemark {

using nlohmann::json;

void RunConfig::validate() const {
  if (backend != "mock" && backend != "remote") throw InvalidArgument("backend must be mock or remote");
  if (backend == "remote") provider.validate();
  weights.validate();
  if (n == 0) throw InvalidArgument("n must be at least 1");
  policy.validate();
  if (jobs == 0) throw InvalidArgument("jobs must be at least 1");
}

std::string RunConfig::to_json() const {
  json j;
  j["backend"] = backend;
  j["provider"] = {{"endpoint_url", provider.endpoint_url},
                   {"model_name", provider.model_name},
                   {"api_key_env", provider.api_key_env},
                   {"temperature", provider.temperature},
                   {"timeout_seconds", provider.timeout_seconds},
                   {"max_retries", provider.max_retries},
                   {"requests_per_minute", provider.requests_per_minute},
                   {"max_in_flight", provider.max_in_flight}};
  j["weights"] = json::parse(weights_to_json(weights));
  j["n"] = n;
  j["seed"] = seed;
  j["margin"] = policy.margin;
  j["tests"] = tests ? json(tests->string()) : json(nullptr);
  j["verify_with_tests"] = verify_with_tests;
  j["validators"] = json::object();
  for (const auto& [lang, cmd] : validators) j["validators"][std::string(to_string(lang))] = cmd;
  j["jobs"] = jobs;
  return j.dump(2) + "\n";
}

RunConfig RunConfig::from_json(std::string_view text, const std::filesystem::path& base) {
  RunConfig c;
  try {
    auto j = json::parse(text);
    if (!j.is_object()) throw FormatError("run config must be a JSON object");
    if (j.contains("api_key")) throw InvalidArgument("API keys are read from the environment, not from config files");
    c.backend = j.value("backend", c.backend);
    if (j.contains("provider")) {
      const auto& p = j["provider"];
      if (p.contains("api_key")) throw InvalidArgument("API keys are read from the environment, not from config files");
      c.provider.endpoint_url = p.value("endpoint_url", c.provider.endpoint_url);
      c.provider.model_name = p.value("model_name", c.provider.model_name);
      c.provider.api_key_env = p.value("api_key_env", c.provider.api_key_env);
      c.provider.temperature = p.value("temperature", c.provider.temperature);
      c.provider.timeout_seconds = p.value("timeout_seconds", c.provider.timeout_seconds);
      c.provider.max_retries = p.value("max_retries", c.provider.max_retries);
      c.provider.requests_per_minute = p.value("requests_per_minute", c.provider.requests_per_minute);
      c.provider.max_in_flight = p.value("max_in_flight", c.provider.max_in_flight);
    }
    if (j.contains("weights")) {
      const auto& w = j["weights"];
      if (w.is_string()) {
        std::filesystem::path wp = w.get<std::string>();
        c.weights = load_weights(wp.is_absolute() ? wp : base / wp);
      } else {
        c.weights = {w.at("alpha").get<double>(), w.at("beta").get<double>(), w.at("gamma").get<double>(),
                     w.at("delta").get<double>()};
      }
    }
    c.n = j.value("n", c.n);
    c.seed = j.value("seed", c.seed);
    c.policy.margin = j.value("margin", c.policy.margin);
    if (j.contains("tests") && !j["tests"].is_null()) {
      std::filesystem::path tp = j["tests"].get<std::string>();
      c.tests = tp.is_absolute() ? tp : base / tp;
    }
    c.verify_with_tests = j.value("verify_with_tests", c.verify_with_tests);
    if (j.contains("validators")) {
      for (const auto& [tag, cmd] : j["validators"].items()) c.validators[parse_language(tag)] = cmd.get<std::string>();
    }
    c.jobs = j.value("jobs", c.jobs);
  } catch (const json::exception& e) {
    throw FormatError(std::string("invalid run config: ") + e.what());
  }
  c.validate();
  return c;
}

RunConfig RunConfig::load(const std::filesystem::path& path) {
  return from_json(read_file(path), path.parent_path());
}

std::shared_ptr<const TestSuite> RunConfig::load_tests() const {
  if (!tests) return nullptr;
  return std::make_shared<const TestSuite>(TestSuite::load(*tests));
}

Backend RunConfig::make_backend() const {
  if (backend == "remote") return Backend::remote(provider);
  return Backend::mock(verify_with_tests ? load_tests() : nullptr);
}

}  // namespace codemark
