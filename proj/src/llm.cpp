#include "koobf/llm.hpp"

#include <cstdlib>
#include <fstream>
#include <map>

#include <httplib.h>
#include <json.hpp>

#include "koobf/errors.hpp"
#include "koobf_prompts.hpp"

namespace koobf {

using nlohmann::json;

const std::string& latin_prompt() {
    static const std::string prompt = detail::kLatinPrompt;
    return prompt;
}

const std::string& semantic_prompt() {
    static const std::string prompt = detail::kSemanticPrompt;
    return prompt;
}

struct LlmBackend::Impl {
    LlmConfig config;
    std::map<std::string, std::string> replay;  // canonical request -> raw body

    void load_replay() {
        if (config.replay_path.empty()) return;
        std::ifstream in(config.replay_path);
        if (!in) {
            if (config.replay_only) {
                throw BackendUnavailableError("replay file not readable: " + config.replay_path);
            }
            return;
        }
        std::string line;
        size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (line.empty()) continue;
            json row = json::parse(line, nullptr, false);
            if (row.is_discarded() || !row.contains("request") || !row.contains("response")) {
                throw ParseError("replay line is not {\"request\":..,\"response\":..}", line_no);
            }
            std::string body = row["response"].is_string()
                                   ? row["response"].get<std::string>()
                                   : row["response"].dump();
            replay[row["request"].dump()] = body;
        }
    }

    void record(const std::string& request_key, const std::string& body) const {
        if (config.replay_path.empty()) return;
        std::ofstream out(config.replay_path, std::ios::app);
        if (!out) return;
        json row;
        row["request"] = json::parse(request_key);
        row["response"] = body;
        out << row.dump() << "\n";
    }

    std::string fetch(const std::string& request_key) {
        auto cached = replay.find(request_key);
        if (cached != replay.end()) return cached->second;
        if (config.replay_only) {
            throw BackendUnavailableError("request not found in replay and replay-only is set");
        }

        const char* key = std::getenv(config.api_key_env.c_str());
        if (key == nullptr || *key == '\0') {
            throw BackendUnavailableError("credential environment variable " +
                                          config.api_key_env + " is not set");
        }
        httplib::Client client(config.base_url);
        if (!client.is_valid()) {
            throw BackendUnavailableError("cannot construct a client for " + config.base_url);
        }
        client.set_connection_timeout(config.timeout_sec);
        client.set_read_timeout(config.timeout_sec);
        httplib::Headers headers = {{"Authorization", std::string("Bearer ") + key}};
        auto res = client.Post(config.path, headers, request_key, "application/json");
        if (!res) {
            throw BackendUnavailableError("request failed: " + httplib::to_string(res.error()));
        }
        if (res->status != 200) {
            throw BackendUnavailableError("endpoint returned status " +
                                          std::to_string(res->status));
        }
        replay[request_key] = res->body;
        record(request_key, res->body);
        return res->body;
    }
};

LlmBackend::LlmBackend(LlmConfig config) : impl_(std::make_unique<Impl>()) {
    impl_->config = std::move(config);
    impl_->load_replay();
}

LlmBackend::~LlmBackend() = default;

std::string LlmBackend::rewrite(const std::string& text, TranslitMode mode) {
    json request = {
        {"model", impl_->config.model},
        {"messages",
         {{{"role", "system"},
           {"content", mode == TranslitMode::Latin ? latin_prompt() : semantic_prompt()}},
          {{"role", "user"}, {"content", json{{"input", text}}.dump()}}}},
    };
    std::string body = impl_->fetch(request.dump());
    return extract_output(body, text);
}

std::string LlmBackend::extract_output(const std::string& body, const std::string& input) {
    json reply = json::parse(body, nullptr, false);
    if (reply.is_discarded()) {
        throw MalformedRemoteResponseError("reply body is not JSON");
    }
    if (!reply.contains("choices") || !reply["choices"].is_array() || reply["choices"].empty()) {
        throw MalformedRemoteResponseError("reply has no choices");
    }
    const json& message = reply["choices"][0].value("message", json::object());
    if (!message.contains("content") || !message["content"].is_string()) {
        throw MalformedRemoteResponseError("reply has no message content");
    }
    json content = json::parse(message["content"].get<std::string>(), nullptr, false);
    if (content.is_discarded() || !content.is_object() || !content.contains("output") ||
        !content["output"].is_string()) {
        throw MalformedRemoteResponseError("content is not the {\"input\":..,\"output\":..} shape");
    }
    if (content.contains("input") && content["input"].is_string() &&
        content["input"].get<std::string>() != input) {
        throw MalformedRemoteResponseError("echoed input does not match the request");
    }
    return content["output"].get<std::string>();
}

}  // namespace koobf
