#pragma once

#include <chrono>
#include <memory>
#include <string>

#include "negotia/engine.hpp"
#include "negotia/scripted.hpp"

namespace negotia {

struct BackendConfig {
  enum class Kind { RemoteChat, ScriptedConcession };

  Kind kind = Kind::ScriptedConcession;
  std::string endpoint;  // RemoteChat base URL; falls back to NEGOTIA_API_BASE
  std::string model = "gpt-4o-mini";
  double temperature = 0.7;
  int max_turns = 20;
  std::chrono::seconds timeout{60};
  RetryPolicy retry;
  std::int64_t seed = 0;  // ScriptedConcession
  double concession_fraction = 0.25;
  int max_concurrent = 8;

  void validate() const {
    if (temperature < 0.0 || temperature > 2.0)
      throw ConfigError("temperature must be within [0, 2]");
    if (max_turns < 2) throw ConfigError("max_turns must be at least 2");
  }

  std::string tag() const {
    return kind == Kind::ScriptedConcession ? "scripted_concession" : "remote:" + model;
  }
};

/// Builds the chat client for a RemoteChat backend, honoring the
/// NEGOTIA_CAPTURE mirror file: a plain path records live traffic, a
/// "replay:<path>" value serves captured replies instead of the network.
inline std::shared_ptr<ChatBackend> make_remote_chat_backend(const BackendConfig& config) {
  std::string capture;
  if (const char* env = std::getenv("NEGOTIA_CAPTURE")) capture = env;
  if (capture.rfind("replay:", 0) == 0) {
    auto store = std::make_shared<CaptureStore>(CaptureStore::load(capture.substr(7)));
    return std::make_shared<ReplayBackend>(store);
  }

  RemoteOptions opts = remote_options_from_env();
  if (!config.endpoint.empty()) opts.base_url = config.endpoint;
  opts.timeout = config.timeout;
  opts.retry = config.retry;
  opts.max_concurrent = config.max_concurrent;
  std::shared_ptr<ChatBackend> backend = std::make_shared<RemoteChatBackend>(opts);

  if (!capture.empty()) {
    auto store = std::make_shared<CaptureStore>(CaptureStore::load(capture));
    store->set_path(capture);
    backend = std::make_shared<RecordingBackend>(backend, store);
  }
  return backend;
}

inline std::unique_ptr<Agent> make_agent(const ScenarioBundle& scenario, const std::string& id,
                                         const std::string& role, const PromptBundle& bundle,
                                         const BackendConfig& config,
                                         const std::shared_ptr<ChatBackend>& remote) {
  if (config.kind == BackendConfig::Kind::ScriptedConcession)
    return make_scripted_agent(scenario, id, role, config.seed, config.concession_fraction);
  return std::make_unique<LlmAgent>(id, scenario, bundle, remote, config.model,
                                    config.temperature);
}

/// Runs one episode with both sides on the configured backend.
inline EpisodeRecord run_episode(const ScenarioBundle& scenario,
                                 const ParticipantSpec& participant_a,
                                 const ParticipantSpec& participant_b,
                                 const PromptBundle& bundle_a, const PromptBundle& bundle_b,
                                 const BackendConfig& config,
                                 const std::string& episode_id = "episode") {
  config.validate();

  std::shared_ptr<ChatBackend> remote;
  if (config.kind == BackendConfig::Kind::RemoteChat) remote = make_remote_chat_backend(config);

  auto agent_a = make_agent(scenario, "a", scenario.role_a, bundle_a, config, remote);
  auto agent_b = make_agent(scenario, "b", scenario.role_b, bundle_b, config, remote);

  EngineOptions options;
  options.episode_id = episode_id;
  options.max_turns = config.max_turns;
  options.seed = config.seed;
  options.backend_tag = config.tag();
  return run_episode_core(scenario, participant_a, participant_b, *agent_a, *agent_b, options);
}

}  // namespace negotia
