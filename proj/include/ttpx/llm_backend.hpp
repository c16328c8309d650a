#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ttpx/prompts.hpp"

namespace ttpx {

struct BackendConfig {
    std::string backend_id;       // provider+model label, e.g. "openai:gpt-4o" or "mock"
    std::string endpoint;         // chat-completions URL (HTTP backend only)
    std::string model_name;
    double temperature = 0.0;
    double timeout_seconds = 60.0;
    int max_retries = 2;          // extra completions after a parse failure
    std::string api_key_env;      // name of the env var holding the credential
    std::string fixtures_path;    // when set, requests are served by the scripted mock

    void validate() const;  // throws ConfigError
};

BackendConfig backend_config_from_json(const nlohmann::json& j);
BackendConfig load_backend_config(const std::filesystem::path& path);

struct ChatRequest {
    std::string system_prompt;
    std::string user_prompt;
    StageTag stage_tag = StageTag::behavior_extraction;
};

/// SHA-256 hex digest of the order-fixed canonical serialization of
/// (backend_id, model_name, temperature, stage_tag, system, user). Equal
/// requests under equal configs always collide.
std::string cache_key_digest(const ChatRequest& req, const BackendConfig& cfg);

/// Content-addressed response cache: one inspectable JSON file per key,
/// filename = digest. Concurrent writers of the same key are resolved by
/// atomic rename (last write wins with identical content).
class ResponseCache {
public:
    ResponseCache() = default;  // disabled
    explicit ResponseCache(std::filesystem::path dir);

    bool enabled() const { return !dir_.empty(); }
    std::optional<std::string> lookup(const std::string& digest) const;
    void store(const std::string& digest, const ChatRequest& req, const BackendConfig& cfg,
               const std::string& response) const;

private:
    std::filesystem::path dir_;
};

class ChatBackend {
public:
    virtual ~ChatBackend() = default;

    /// Returns the raw completion text. Throws BackendError on transport
    /// failure.
    virtual std::string complete_raw(const ChatRequest& req, const BackendConfig& cfg) = 0;
};

/// OpenAI-style chat-completions client over HTTP(S). Credentials come from
/// the env var named in the config, never from flags or files.
class HttpBackend : public ChatBackend {
public:
    std::string complete_raw(const ChatRequest& req, const BackendConfig& cfg) override;
};

/// Scripted backend for deterministic tests and offline runs. Responses are
/// matched by request digest when scripted that way, otherwise consumed in
/// sequence per stage. Thread-safe; records every call.
class MockBackend : public ChatBackend {
public:
    struct LoggedCall {
        StageTag stage_tag;
        std::string system_prompt;
        std::string user_prompt;
        std::string digest;
    };

    MockBackend() = default;

    /// Fixture JSONL: {"stage_tag": ..., "match": {"digest": ...} or
    /// {"sequence": n}, "response": "..."} per line.
    static MockBackend from_fixture_file(const std::filesystem::path& path);

    void add_sequence_response(StageTag tag, std::string response);
    void add_digest_response(std::string digest, std::string response);

    std::string complete_raw(const ChatRequest& req, const BackendConfig& cfg) override;

    std::size_t call_count() const;
    std::vector<LoggedCall> calls() const;

private:
    mutable std::mutex mu_;
    std::map<std::string, std::string> by_digest_;
    std::map<StageTag, std::vector<std::string>> sequences_;
    std::map<StageTag, std::size_t> cursors_;
    std::vector<LoggedCall> calls_;
};

/// Builds the backend matching the config: mock when fixtures_path is set,
/// HTTP otherwise.
std::unique_ptr<ChatBackend> make_backend(const BackendConfig& cfg);

/// Cache-through completion: a hit returns the stored response with no
/// backend call; a miss calls the backend and stores the response.
std::string complete(const ChatRequest& req, const BackendConfig& cfg, ChatBackend& backend,
                     const ResponseCache& cache);

/// Validates that raw is exactly one JSON object obeying the stage schema
/// (a single fenced code block wrapper is tolerated and stripped; extra
/// top-level fields are rejected). Throws ParseError.
nlohmann::json parse_stage_json(const std::string& raw, StageTag schema);

struct ParsedCompletion {
    nlohmann::json value;
    int attempt_count = 1;
};

/// complete() plus parse, retrying with fresh cache-bypassing completions on
/// parse failure. After 1+max_retries failed attempts throws
/// StageParseFailure carrying every raw attempt.
ParsedCompletion complete_with_repair(const ChatRequest& req, const BackendConfig& cfg,
                                      ChatBackend& backend, const ResponseCache& cache);

}  // namespace ttpx
