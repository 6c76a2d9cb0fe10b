#pragma once

#include <string>

#include "koobf/dicts.hpp"
#include "koobf/edits.hpp"
#include "koobf/rng.hpp"

namespace koobf {

// Rule 13. Syllable -> CJK homophone via an injective map (수상해->水상해).
Applied phonetic_cjk(const std::string& text, double tau, Rng& rng,
                     const TranslitDict& dict = default_translit_dict());

enum class TranslitMode { Latin, Semantic };

// A backend rewrites the whole sentence; the offline fallback lives in
// transliterate() itself and remote backends are provided by llm.hpp.
class TranslitBackend {
public:
    virtual ~TranslitBackend() = default;
    virtual std::string rewrite(const std::string& text, TranslitMode mode) = 0;
};

// Rules 12 (Latin) and 14 (semantic). Offline mode (backend == nullptr) is
// deterministic under a fixed seed: Latin romanizes the first syllable of each
// selected word, borrowing a Latin onset only when the medial vowel is one of
// {ㅏㅑㅓㅕㅣㅔㅐ} and the coda is empty (게시판->gㅔ시판); semantic replaces
// dictionary phrases (부탁해->구다사이). Both cap altered word tokens at
// ceil(0.5 * word count). Errors: NoEligibleTargetError,
// BackendUnavailableError, MalformedRemoteResponseError.
Applied transliterate(const std::string& text, TranslitMode mode, double tau, Rng& rng,
                      TranslitBackend* backend = nullptr,
                      const TranslitDict& dict = default_translit_dict());

// Exposed for tests: standard romanization used by the offline Latin mode.
std::string romanize_syllable(char32_t syllable);

size_t word_token_count(const std::string& text);

}  // namespace koobf
