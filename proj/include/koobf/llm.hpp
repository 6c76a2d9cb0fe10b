#pragma once

#include <memory>
#include <string>

#include "koobf/rules/transliteration.hpp"

namespace koobf {

// Chat-completions transliteration backend. The system prompts are the
// shipped data/prompts/*.txt files, embedded verbatim at build time.
struct LlmConfig {
    std::string base_url = "https://api.openai.com";
    std::string path = "/v1/chat/completions";
    std::string model = "gpt-5-nano";
    std::string api_key_env = "KOOBF_API_KEY";
    std::string replay_path;   // JSONL of {"request":..,"response":..}
    bool replay_only = false;  // never touch the network, serve from replay
    int timeout_sec = 30;
};

const std::string& latin_prompt();
const std::string& semantic_prompt();

// Errors: BackendUnavailableError (no key, network failure, non-200),
// MalformedRemoteResponseError (reply is not the documented
// {"input":..,"output":..} shape, or it alters more than half the words).
class LlmBackend : public TranslitBackend {
public:
    explicit LlmBackend(LlmConfig config);
    ~LlmBackend() override;

    std::string rewrite(const std::string& text, TranslitMode mode) override;

    // Parsing split out for tests: body is the raw chat-completions reply.
    static std::string extract_output(const std::string& body, const std::string& input);

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace koobf
