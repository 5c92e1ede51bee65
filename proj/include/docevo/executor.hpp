/*
 * Copyright 2026 The Docevo Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef DOCEVO_EXECUTOR_HPP
#define DOCEVO_EXECUTOR_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "docevo/outline.hpp"

namespace docevo {

// Rendered model query for a generation-requiring action. The text is a
// deterministic function of (state digest, action); the structured fields
// let executors splice results without re-parsing the text.
struct PolicyQuery {
    std::string state_digest;
    std::string target_id;
    std::string action_kind;
    std::string intent;
    std::string text;

    std::string hash() const;
};

// Realizes the generative half of the transition operator: given the
// current state and a rendered query, produce the next state. Returned
// trees are re-validated by the caller before being accepted.
class SemanticExecutor {
public:
    virtual ~SemanticExecutor() = default;
    virtual OutlineTree execute(const OutlineTree& state, const PolicyQuery& query) = 0;
};

// Replaces the target paragraph's content with a fixed string (or the
// result of a custom callback). Deterministic; for tests and dry runs.
class StubExecutor : public SemanticExecutor {
public:
    explicit StubExecutor(std::string fixed_content);
    explicit StubExecutor(std::function<OutlineTree(const OutlineTree&, const PolicyQuery&)> fn);

    OutlineTree execute(const OutlineTree& state, const PolicyQuery& query) override;

private:
    std::string fixed_content_;
    std::function<OutlineTree(const OutlineTree&, const PolicyQuery&)> fn_;
};

struct ExchangeRecord {
    std::string state_digest;
    std::string query_hash;
    std::string query_text;
    std::string response_text;
    OutlineTree result_tree;
    std::string timestamp;
    std::string model;
};

struct RemoteConfig {
    std::string endpoint_url;  // e.g. http://host:port/v1/chat/completions
    std::string api_key;
    std::string model;
    int max_retries = 3;
    int timeout_seconds = 60;
    int max_in_flight = 4;

    // Reads ENDPOINT_URL, API_KEY, MODEL_NAME.
    static RemoteConfig from_env();
};

// Chat-completions client. The model must answer with the replacement node
// as canonical JSON; a fenced-block extractor tolerates prose around it.
// Unparsable responses are retried with fresh sampling, then rejected.
class RemoteExecutor : public SemanticExecutor {
public:
    explicit RemoteExecutor(RemoteConfig config);
    ~RemoteExecutor() override;

    OutlineTree execute(const OutlineTree& state, const PolicyQuery& query) override;

    const std::string& last_response() const { return last_response_; }

private:
    RemoteConfig config_;
    std::string last_response_;
    struct Gate;
    std::shared_ptr<Gate> gate_;
};

// Serves exclusively from a recorded store; key = (state digest, query hash).
class ReplayExecutor : public SemanticExecutor {
public:
    explicit ReplayExecutor(const std::string& store_path);

    OutlineTree execute(const OutlineTree& state, const PolicyQuery& query) override;

    std::size_t size() const { return records_.size(); }

private:
    std::unordered_map<std::string, ExchangeRecord> records_;
};

// Wraps another executor and appends an ExchangeRecord per successful call.
class RecordingExecutor : public SemanticExecutor {
public:
    RecordingExecutor(std::unique_ptr<SemanticExecutor> inner, std::string store_path,
                      std::string model_label = {});

    OutlineTree execute(const OutlineTree& state, const PolicyQuery& query) override;

private:
    std::unique_ptr<SemanticExecutor> inner_;
    std::string store_path_;
    std::string model_label_;
    std::mutex write_mutex_;
};

enum class ExchangeMode { Record, Replay, Passthrough };

// record: remote calls, appending to the store. replay: store only (the
// store must exist). passthrough: remote calls, never writes.
std::unique_ptr<SemanticExecutor> record_and_replay(ExchangeMode mode, const std::string& store_path,
                                                    const RemoteConfig& config = RemoteConfig::from_env());

// Store I/O, shared with tests that build replay fixtures.
void append_exchange_record(const std::string& store_path, const ExchangeRecord& record);
std::vector<ExchangeRecord> load_exchange_store(const std::string& store_path);

// Extracts the JSON payload from a model response: the first fenced code
// block when present, otherwise the first balanced {...} object.
std::string extract_json_payload(const std::string& response);

// Replaces the content (and optional citations) of the target paragraph.
// Shared by executors that realize content edits.
OutlineTree splice_paragraph_content(const OutlineTree& state, const std::string& target_id,
                                     const std::string& content,
                                     const std::optional<std::vector<std::string>>& citations);

}  // namespace docevo

#endif  // DOCEVO_EXECUTOR_HPP
