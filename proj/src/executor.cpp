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
#include "docevo/executor.hpp"

#include <chrono>
#include <condition_variable>
#include <cstdlib>
#include <ctime>
#include <fstream>

#include <httplib.h>
#include <json.hpp>

#include "docevo/errors.hpp"
#include "docevo/rng.hpp"

namespace docevo {

using nlohmann::json;

std::string PolicyQuery::hash() const { return to_hex64(fnv1a64(text)); }

OutlineTree splice_paragraph_content(const OutlineTree& state, const std::string& target_id,
                                     const std::string& content,
                                     const std::optional<std::vector<std::string>>& citations) {
    OutlineTree next = state;
    bool done = false;
    std::function<void(std::vector<OutlineNode>&)> visit = [&](std::vector<OutlineNode>& nodes) {
        for (auto& node : nodes) {
            if (node.id == target_id) {
                if (node.kind != NodeKind::Paragraph)
                    throw Error(Errc::InvalidSemanticEdit,
                                "semantic edits replace paragraph content; '" + target_id +
                                    "' is a " + node_kind_name(node.kind));
                node.content = content;
                if (citations) node.citations = *citations;
                done = true;
                return;
            }
            visit(node.children);
            if (done) return;
        }
    };
    visit(next.root_sections);
    if (!done) throw Error(Errc::TargetNotFound, "no node with id '" + target_id + "'");
    return next;
}

StubExecutor::StubExecutor(std::string fixed_content) : fixed_content_(std::move(fixed_content)) {}

StubExecutor::StubExecutor(std::function<OutlineTree(const OutlineTree&, const PolicyQuery&)> fn)
    : fn_(std::move(fn)) {}

OutlineTree StubExecutor::execute(const OutlineTree& state, const PolicyQuery& query) {
    if (fn_) return fn_(state, query);
    return splice_paragraph_content(state, query.target_id, fixed_content_, std::nullopt);
}

std::string extract_json_payload(const std::string& response) {
    auto fence = response.find("```");
    if (fence != std::string::npos) {
        auto start = response.find('\n', fence);
        if (start != std::string::npos) {
            ++start;
            auto end = response.find("```", start);
            if (end != std::string::npos) return response.substr(start, end - start);
        }
    }
    // Fallback: first balanced object, quote-aware.
    auto open = response.find('{');
    if (open == std::string::npos) return {};
    int depth = 0;
    bool in_string = false;
    for (std::size_t i = open; i < response.size(); ++i) {
        const char c = response[i];
        if (in_string) {
            if (c == '\\') {
                ++i;
            } else if (c == '"') {
                in_string = false;
            }
            continue;
        }
        if (c == '"') {
            in_string = true;
        } else if (c == '{') {
            ++depth;
        } else if (c == '}') {
            if (--depth == 0) return response.substr(open, i - open + 1);
        }
    }
    return {};
}

namespace {

std::string iso_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

json record_to_json(const ExchangeRecord& r) {
    json j;
    j["state_digest"] = r.state_digest;
    j["query_hash"] = r.query_hash;
    j["query_text"] = r.query_text;
    j["response_text"] = r.response_text;
    j["result_tree"] = tree_to_json(r.result_tree);
    j["timestamp"] = r.timestamp;
    j["model"] = r.model;
    return j;
}

ExchangeRecord record_from_json(const json& j) {
    ExchangeRecord r;
    r.state_digest = j.value("state_digest", std::string());
    r.query_hash = j.value("query_hash", std::string());
    r.query_text = j.value("query_text", std::string());
    r.response_text = j.value("response_text", std::string());
    if (j.contains("result_tree")) r.result_tree = tree_from_json(j.at("result_tree"));
    r.timestamp = j.value("timestamp", std::string());
    r.model = j.value("model", std::string());
    return r;
}

std::string store_key(const std::string& digest, const std::string& query_hash) {
    return digest + ":" + query_hash;
}

// Applies a model response to the state: the payload must be the replacement
// node for the query target. Only content and citations are taken from it;
// the id stays the target's.
OutlineTree splice_response(const OutlineTree& state, const PolicyQuery& query,
                            const std::string& response) {
    const std::string payload = extract_json_payload(response);
    if (payload.empty())
        throw Error(Errc::InvalidSemanticEdit, "response carries no JSON payload");
    json j;
    try {
        j = json::parse(payload);
    } catch (const json::exception& e) {
        throw Error(Errc::InvalidSemanticEdit, std::string("response JSON is invalid: ") + e.what());
    }
    if (!j.is_object() || !j.contains("content") || !j.at("content").is_string())
        throw Error(Errc::InvalidSemanticEdit, "replacement node needs a string 'content'");
    std::optional<std::vector<std::string>> citations;
    if (j.contains("citations")) {
        try {
            citations = j.at("citations").get<std::vector<std::string>>();
        } catch (const json::exception&) {
            throw Error(Errc::InvalidSemanticEdit, "'citations' must be an array of keys");
        }
    }
    return splice_paragraph_content(state, query.target_id, j.at("content").get<std::string>(),
                                    citations);
}

}  // namespace

void append_exchange_record(const std::string& store_path, const ExchangeRecord& record) {
    std::ofstream out(store_path, std::ios::app);
    if (!out) throw Error(Errc::IoError, "cannot open store '" + store_path + "' for append");
    out << record_to_json(record).dump() << "\n";
}

std::vector<ExchangeRecord> load_exchange_store(const std::string& store_path) {
    std::ifstream in(store_path);
    if (!in) throw Error(Errc::IoError, "cannot open store '" + store_path + "'");
    std::vector<ExchangeRecord> records;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            records.push_back(record_from_json(json::parse(line)));
        } catch (const json::exception& e) {
            throw Error(Errc::IoError, std::string("corrupt store line: ") + e.what());
        }
    }
    return records;
}

RemoteConfig RemoteConfig::from_env() {
    RemoteConfig config;
    if (const char* url = std::getenv("ENDPOINT_URL")) config.endpoint_url = url;
    if (const char* key = std::getenv("API_KEY")) config.api_key = key;
    if (const char* model = std::getenv("MODEL_NAME")) config.model = model;
    return config;
}

struct RemoteExecutor::Gate {
    std::mutex mutex;
    std::condition_variable cv;
    int available;

    explicit Gate(int slots) : available(slots) {}

    void acquire() {
        std::unique_lock lock(mutex);
        cv.wait(lock, [&] { return available > 0; });
        --available;
    }
    void release() {
        {
            std::lock_guard lock(mutex);
            ++available;
        }
        cv.notify_one();
    }
};

RemoteExecutor::RemoteExecutor(RemoteConfig config)
    : config_(std::move(config)), gate_(std::make_shared<Gate>(std::max(1, config_.max_in_flight))) {
    if (config_.endpoint_url.empty())
        throw Error(Errc::BadConfig, "remote executor needs ENDPOINT_URL");
}

RemoteExecutor::~RemoteExecutor() = default;

namespace {

struct ParsedUrl {
    std::string base;  // scheme://host[:port]
    std::string path;
};

ParsedUrl split_url(const std::string& url) {
    auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos)
        throw Error(Errc::BadConfig, "endpoint URL needs a scheme: " + url);
    auto path_start = url.find('/', scheme_end + 3);
    if (path_start == std::string::npos) return {url, "/"};
    return {url.substr(0, path_start), url.substr(path_start)};
}

}  // namespace

OutlineTree RemoteExecutor::execute(const OutlineTree& state, const PolicyQuery& query) {
    const ParsedUrl url = split_url(config_.endpoint_url);

    json body;
    body["model"] = config_.model;
    body["messages"] = json::array({
        json{{"role", "system"},
             {"content", "You edit hierarchical document outlines. Answer with exactly one JSON "
                         "node in a fenced code block."}},
        json{{"role", "user"}, {"content", query.text}},
    });

    std::string transport_error;
    std::string parse_error;
    for (int attempt = 0; attempt < std::max(1, config_.max_retries); ++attempt) {
        gate_->acquire();
        httplib::Client client(url.base);
        client.set_connection_timeout(config_.timeout_seconds, 0);
        client.set_read_timeout(config_.timeout_seconds, 0);
        httplib::Headers headers;
        if (!config_.api_key.empty())
            headers.emplace("Authorization", "Bearer " + config_.api_key);
        auto result = client.Post(url.path, headers, body.dump(), "application/json");
        gate_->release();

        if (!result) {
            transport_error = httplib::to_string(result.error());
            continue;
        }
        if (result->status < 200 || result->status >= 300) {
            transport_error = "HTTP " + std::to_string(result->status);
            continue;
        }

        std::string content;
        try {
            json envelope = json::parse(result->body);
            content = envelope.at("choices").at(0).at("message").at("content").get<std::string>();
        } catch (const json::exception& e) {
            transport_error = std::string("bad completion envelope: ") + e.what();
            continue;
        }
        last_response_ = content;
        try {
            return splice_response(state, query, content);
        } catch (const Error& e) {
            if (e.code() != Errc::InvalidSemanticEdit) throw;
            parse_error = e.what();  // fresh sampling on the next attempt
        }
    }
    if (!parse_error.empty())
        throw Error(Errc::InvalidSemanticEdit,
                    parse_error + " (after " + std::to_string(config_.max_retries) + " attempts)");
    throw Error(Errc::ExecutorError, transport_error + " [query " + query.hash() + "]");
}

ReplayExecutor::ReplayExecutor(const std::string& store_path) {
    for (auto& record : load_exchange_store(store_path)) {
        records_.emplace(store_key(record.state_digest, record.query_hash), std::move(record));
    }
}

OutlineTree ReplayExecutor::execute(const OutlineTree& state, const PolicyQuery& query) {
    (void)state;
    auto it = records_.find(store_key(query.state_digest, query.hash()));
    if (it == records_.end())
        throw Error(Errc::ReplayMiss, "no recorded exchange for state " + query.state_digest +
                                          " and query " + query.hash());
    return it->second.result_tree;
}

RecordingExecutor::RecordingExecutor(std::unique_ptr<SemanticExecutor> inner, std::string store_path,
                                     std::string model_label)
    : inner_(std::move(inner)), store_path_(std::move(store_path)), model_label_(std::move(model_label)) {}

OutlineTree RecordingExecutor::execute(const OutlineTree& state, const PolicyQuery& query) {
    OutlineTree result = inner_->execute(state, query);

    ExchangeRecord record;
    record.state_digest = query.state_digest;
    record.query_hash = query.hash();
    record.query_text = query.text;
    if (auto* remote = dynamic_cast<RemoteExecutor*>(inner_.get()))
        record.response_text = remote->last_response();
    record.result_tree = result;
    record.timestamp = iso_timestamp();
    record.model = model_label_;

    std::lock_guard lock(write_mutex_);
    append_exchange_record(store_path_, record);
    return result;
}

std::unique_ptr<SemanticExecutor> record_and_replay(ExchangeMode mode, const std::string& store_path,
                                                    const RemoteConfig& config) {
    switch (mode) {
        case ExchangeMode::Record:
            return std::make_unique<RecordingExecutor>(std::make_unique<RemoteExecutor>(config),
                                                       store_path, config.model);
        case ExchangeMode::Replay:
            return std::make_unique<ReplayExecutor>(store_path);
        case ExchangeMode::Passthrough:
            return std::make_unique<RemoteExecutor>(config);
    }
    throw Error(Errc::BadConfig, "unknown exchange mode");
}

}  // namespace docevo
