#pragma once

#include <chrono>
#include <condition_variable>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <regex>
#include <sstream>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "negotia/errors.hpp"
#include "negotia/types.hpp"
#include "negotia/util.hpp"

namespace negotia {

struct ChatMessage {
  std::string role;  // system | user | assistant
  std::string content;
};

struct ChatRequest {
  std::string model;
  double temperature = 0.7;
  std::vector<ChatMessage> messages;
};

struct ChatReply {
  std::string content;
};

inline void to_json(Json& j, const ChatMessage& m) {
  j = Json{{"role", m.role}, {"content", m.content}};
}
inline void from_json(const Json& j, ChatMessage& m) {
  m.role = detail::require_field<std::string>(j, "role");
  m.content = detail::require_field<std::string>(j, "content");
}
inline void to_json(Json& j, const ChatRequest& r) {
  j = Json{{"model", r.model}, {"temperature", r.temperature}, {"messages", r.messages}};
}
inline void from_json(const Json& j, ChatRequest& r) {
  r.model = detail::require_field<std::string>(j, "model");
  r.temperature = detail::require_field<double>(j, "temperature");
  r.messages = detail::require_field<std::vector<ChatMessage>>(j, "messages");
}

/// Stable digest of a request, used as the capture/replay lookup key.
inline std::uint64_t request_digest(const ChatRequest& r) {
  return fnv1a64(Json(r).dump());
}

class ChatBackend {
public:
  virtual ~ChatBackend() = default;
  virtual ChatReply complete(const ChatRequest& request) = 0;
  virtual std::string tag() const = 0;
};

// ---------------------------------------------------------------------------
// Remote chat-completions backend
// ---------------------------------------------------------------------------

struct RetryPolicy {
  int max_attempts = 3;
  std::chrono::milliseconds backoff{250};
};

/// Process-wide cap on in-flight remote requests, shared by agent, judge
/// and classifier clients.
class RequestGate {
public:
  static RequestGate& instance() {
    static RequestGate gate;
    return gate;
  }

  void set_limit(int n) {
    std::lock_guard lock(mutex_);
    limit_ = n > 0 ? n : 1;
    cv_.notify_all();
  }

  void acquire() {
    std::unique_lock lock(mutex_);
    cv_.wait(lock, [&] { return inflight_ < limit_; });
    ++inflight_;
  }

  void release() {
    std::lock_guard lock(mutex_);
    --inflight_;
    cv_.notify_one();
  }

private:
  std::mutex mutex_;
  std::condition_variable cv_;
  int limit_ = 8;
  int inflight_ = 0;
};

struct RemoteOptions {
  std::string base_url;  // e.g. http://127.0.0.1:8089
  std::string api_key;
  std::string path = "/v1/chat/completions";
  std::chrono::seconds timeout{60};
  RetryPolicy retry;
  int max_concurrent = 8;
};

/// POSTs a chat-completions-compatible body and extracts the first choice.
/// A process-wide semaphore caps concurrent in-flight requests.
class RemoteChatBackend : public ChatBackend {
public:
  explicit RemoteChatBackend(RemoteOptions opts) : opts_(std::move(opts)) {
    if (opts_.base_url.empty()) throw ConfigError("remote backend requires a base URL");
    RequestGate::instance().set_limit(opts_.max_concurrent);
  }

  ChatReply complete(const ChatRequest& request) override {
    const std::string body = Json(request).dump();
    std::string last_error;
    for (int attempt = 1; attempt <= opts_.retry.max_attempts; ++attempt) {
      if (attempt > 1) std::this_thread::sleep_for(opts_.retry.backoff * (attempt - 1));
      RequestGate::instance().acquire();
      auto result = post(body);
      RequestGate::instance().release();
      if (!result.first.empty()) {
        try {
          return parse_reply(result.first);
        } catch (const BackendError& e) {
          last_error = e.what();
          continue;  // malformed body counts against the retry budget
        }
      }
      last_error = result.second;
    }
    throw BackendError("remote backend unreachable after " +
                       std::to_string(opts_.retry.max_attempts) + " attempts: " + last_error);
  }

  std::string tag() const override { return "remote:" + opts_.base_url; }

private:
  // Returns (body, "") on HTTP success or ("", error) otherwise.
  std::pair<std::string, std::string> post(const std::string& body) {
    httplib::Client client(opts_.base_url);
    client.set_connection_timeout(opts_.timeout.count(), 0);
    client.set_read_timeout(opts_.timeout.count(), 0);
    httplib::Headers headers;
    if (!opts_.api_key.empty()) headers.emplace("Authorization", "Bearer " + opts_.api_key);
    auto res = client.Post(opts_.path, headers, body, "application/json");
    if (!res) return {"", "transport error: " + httplib::to_string(res.error())};
    if (res->status == 429 || res->status >= 500)
      return {"", "retryable status " + std::to_string(res->status)};
    if (res->status != 200)
      throw BackendError("remote backend returned status " + std::to_string(res->status) + ": " +
                         res->body);
    return {res->body, ""};
  }

  static ChatReply parse_reply(const std::string& body) {
    Json j;
    try {
      j = Json::parse(body);
    } catch (const Json::parse_error& e) {
      throw BackendError(std::string("malformed completion body: ") + e.what());
    }
    if (!j.contains("choices") || !j["choices"].is_array() || j["choices"].empty())
      throw BackendError("completion body has no choices");
    const auto& msg = j["choices"][0];
    if (!msg.contains("message") || !msg["message"].contains("content"))
      throw BackendError("completion choice has no message content");
    return ChatReply{msg["message"]["content"].get<std::string>()};
  }

  RemoteOptions opts_;
};

inline RemoteOptions remote_options_from_env() {
  RemoteOptions opts;
  if (const char* base = std::getenv("NEGOTIA_API_BASE")) opts.base_url = base;
  if (const char* key = std::getenv("NEGOTIA_API_KEY")) opts.api_key = key;
  return opts;
}

// ---------------------------------------------------------------------------
// Capture / replay
// ---------------------------------------------------------------------------

/// JSONL store of {digest, request, response} entries. Replay looks a
/// request up by digest; recording appends live traffic for later replay.
class CaptureStore {
public:
  CaptureStore() = default;

  static CaptureStore load(const std::filesystem::path& path) {
    CaptureStore store;
    store.path_ = path;
    std::ifstream in(path);
    if (!in) return store;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      Json j;
      try {
        j = Json::parse(line);
      } catch (const Json::parse_error& e) {
        throw ParseError(std::string("bad capture line: ") + e.what(),
                         path.string() + ":" + std::to_string(lineno));
      }
      store.replies_[detail::require_field<std::uint64_t>(j, "digest")] =
          detail::require_field<std::string>(j, "response");
    }
    return store;
  }

  void set_path(const std::filesystem::path& path) { path_ = path; }

  bool lookup(std::uint64_t digest, std::string& out) const {
    std::lock_guard lock(mutex_);
    auto it = replies_.find(digest);
    if (it == replies_.end()) return false;
    out = it->second;
    return true;
  }

  void record(const ChatRequest& request, const std::string& response) {
    std::lock_guard lock(mutex_);
    const std::uint64_t digest = request_digest(request);
    replies_[digest] = response;
    if (path_.empty()) return;
    std::filesystem::create_directories(path_.parent_path().empty()
                                            ? std::filesystem::path(".")
                                            : path_.parent_path());
    std::ofstream out(path_, std::ios::app);
    out << Json{{"digest", digest}, {"request", request}, {"response", response}}.dump() << "\n";
  }

private:
  mutable std::mutex mutex_;
  std::unordered_map<std::uint64_t, std::string> replies_;
  std::filesystem::path path_;
};

class ReplayBackend : public ChatBackend {
public:
  explicit ReplayBackend(std::shared_ptr<CaptureStore> store) : store_(std::move(store)) {}

  ChatReply complete(const ChatRequest& request) override {
    std::string response;
    if (!store_->lookup(request_digest(request), response))
      throw BackendError("no captured reply for request digest " +
                         std::to_string(request_digest(request)));
    return ChatReply{response};
  }

  std::string tag() const override { return "replay"; }

private:
  std::shared_ptr<CaptureStore> store_;
};

class RecordingBackend : public ChatBackend {
public:
  RecordingBackend(std::shared_ptr<ChatBackend> inner, std::shared_ptr<CaptureStore> store)
      : inner_(std::move(inner)), store_(std::move(store)) {}

  ChatReply complete(const ChatRequest& request) override {
    ChatReply reply = inner_->complete(request);
    store_->record(request, reply.content);
    return reply;
  }

  std::string tag() const override { return inner_->tag() + "+capture"; }

private:
  std::shared_ptr<ChatBackend> inner_;
  std::shared_ptr<CaptureStore> store_;
};

// ---------------------------------------------------------------------------
// Deterministic offline stand-in
// ---------------------------------------------------------------------------

/// Produces plausible, deterministic replies for judge and questionnaire
/// prompts without any network. Scores are a pure function of the prompt
/// text, so identical prompts always score identically.
class OfflineHeuristicBackend : public ChatBackend {
public:
  ChatReply complete(const ChatRequest& request) override {
    std::string prompt;
    for (const auto& m : request.messages) prompt += m.content + "\n";

    // Rubric prompts enumerate "<Name> [lo, hi]:" lines; emit one integer
    // per enumerated dimension.
    static const std::regex dim_re(R"(^- ([A-Za-z][A-Za-z ]*) \[(-?\d+), (-?\d+)\]:)");
    std::string scores;
    std::istringstream lines(prompt);
    std::string line;
    while (std::getline(lines, line)) {
      std::smatch m;
      if (!std::regex_search(line, m, dim_re)) continue;
      const std::string name = m[1];
      const long lo = std::stol(m[2]);
      const long hi = std::stol(m[3]);
      const long span = hi - lo + 1;
      const long value = lo + static_cast<long>(fnv1a64(prompt + "|" + name) % span);
      scores += name + ": " + std::to_string(value) + "\n";
    }
    if (!scores.empty()) return ChatReply{scores};

    if (prompt.find("single integer") != std::string::npos) {
      const long value = 1 + static_cast<long>(fnv1a64(prompt) % 7);
      return ChatReply{std::to_string(value)};
    }

    return ChatReply{"Understood, let's continue the conversation."};
  }

  std::string tag() const override { return "offline"; }
};

}  // namespace negotia
