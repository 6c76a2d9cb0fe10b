#include "koobf/rules/transliteration.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "koobf/errors.hpp"
#include "koobf/hangul.hpp"
#include "rule_common.hpp"

namespace koobf {

namespace {

using detail::OutputBuilder;

const char* kInitialRoman[19] = {"g", "kk", "n",  "d", "tt", "r", "m", "b", "pp", "s",
                                 "ss", "",  "j",  "jj", "ch", "k", "t", "p", "h"};
const char* kMedialRoman[21] = {"a",  "ae", "ya", "yae", "eo", "e",  "yeo", "ye", "o",  "wa", "wae",
                                "oe", "yo", "u",  "wo",  "we", "wi", "yu",  "eu", "ui", "i"};
// coda letters follow representative pronunciation
const char* kFinalRoman[28] = {"",  "k", "k", "k", "n", "n", "n", "t", "l", "k",
                               "m", "l", "l", "l", "p", "l", "m", "p", "p", "t",
                               "t", "ng", "t", "t", "k", "t", "p", "t"};

// vowels whose compat jamo stays legible next to a Latin onset
bool borrowable_medial(int medial) {
    static const std::set<int> ok = {0, 2, 4, 6, 20, 5, 1};  // ㅏㅑㅓㅕㅣㅔㅐ
    return ok.count(medial) > 0;
}

size_t half_word_cap(size_t words) { return (words + 1) / 2; }

std::vector<std::string> split_tokens(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            if (!cur.empty()) out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

Applied from_backend(const std::string& text, TranslitMode mode, TranslitBackend& backend) {
    std::string rewritten = backend.rewrite(text, mode);
    if (rewritten.empty() || rewritten == text) {
        throw MalformedRemoteResponseError("backend returned an empty or unchanged sentence");
    }
    // at most half of the word tokens may be touched
    std::vector<std::string> in_tokens = split_tokens(text);
    std::vector<std::string> out_tokens = split_tokens(rewritten);
    std::multiset<std::string> pool(in_tokens.begin(), in_tokens.end());
    size_t common = 0;
    for (const auto& t : out_tokens) {
        auto it = pool.find(t);
        if (it != pool.end()) {
            pool.erase(it);
            ++common;
        }
    }
    size_t changed = std::max(in_tokens.size(), out_tokens.size()) - common;
    if (in_tokens.empty() || changed > half_word_cap(in_tokens.size())) {
        throw MalformedRemoteResponseError("backend rewrote more than half of the words");
    }
    Applied applied;
    applied.text = rewritten;
    applied.edits.push_back({0, text, rewritten});
    return applied;
}

}  // namespace

std::string romanize_syllable(char32_t syllable) {
    JamoTriple j = decompose(syllable);
    std::string out = kInitialRoman[j.initial];
    out += kMedialRoman[j.medial];
    out += kFinalRoman[j.final];
    return out;
}

size_t word_token_count(const std::string& text) {
    return detail::word_ranges(segment(text)).size();
}

Applied phonetic_cjk(const std::string& text, double tau, Rng& rng, const TranslitDict& dict) {
    SegmentedText seg = segment(text);
    std::vector<size_t> eligible;
    for (size_t i = 0; i < seg.units.size(); ++i) {
        if (seg.units[i].is_syllable() && dict.cjk_phonetic.count(detail::render_unit(seg.units[i]))) {
            eligible.push_back(i);
        }
    }
    if (eligible.empty()) throw NoEligibleTargetError("no homophonic hanja entry");

    size_t m = rewrite_budget(tau, eligible.size());
    std::set<size_t> chosen;
    for (size_t pick : rng.sample_indices(eligible.size(), m)) chosen.insert(eligible[pick]);

    OutputBuilder out;
    for (size_t i = 0; i < seg.units.size(); ++i) {
        if (chosen.count(i)) {
            std::string before = detail::render_unit(seg.units[i]);
            out.replace(before, dict.cjk_phonetic.at(before));
        } else {
            out.keep(seg.units[i]);
        }
    }
    return out.done();
}

namespace {

Applied latin_offline(const SegmentedText& seg, double tau, Rng& rng) {
    auto words = detail::word_ranges(seg);
    std::vector<size_t> eligible;
    for (size_t w = 0; w < words.size(); ++w) {
        if (seg.units[words[w].begin].is_syllable()) eligible.push_back(w);
    }
    if (eligible.empty()) throw NoEligibleTargetError("no word starts with a Hangul syllable");

    size_t m = std::min(rewrite_budget(tau, eligible.size()), half_word_cap(words.size()));
    std::set<size_t> chosen;
    for (size_t pick : rng.sample_indices(eligible.size(), m)) chosen.insert(eligible[pick]);

    std::map<size_t, std::string> replacement;  // unit index of word-initial syllable
    for (size_t w : chosen) {
        const Unit& u = seg.units[words[w].begin];
        std::string after;
        if (u.jamo.final == 0 && borrowable_medial(u.jamo.medial)) {
            after = kInitialRoman[u.jamo.initial];
            after += encode_utf8(std::u32string(1, medial_to_compat(u.jamo.medial)));
        } else {
            after = romanize_syllable(u.scalar);
        }
        replacement[words[w].begin] = after;
    }

    OutputBuilder out;
    for (size_t i = 0; i < seg.units.size(); ++i) {
        auto it = replacement.find(i);
        if (it != replacement.end()) {
            out.replace(detail::render_unit(seg.units[i]), it->second);
        } else {
            out.keep(seg.units[i]);
        }
    }
    return out.done();
}

struct PhraseSite {
    size_t begin_unit;
    size_t end_unit;
    size_t word_count;
    const std::string* replacement;
};

Applied semantic_offline(const SegmentedText& seg, double tau, Rng& rng,
                         const TranslitDict& dict) {
    auto words = detail::word_ranges(seg);

    // phrase keys tokenized once; longer phrases win at the same start word
    struct Key {
        std::vector<std::string> tokens;
        const std::string* replacement;
    };
    std::vector<Key> keys;
    for (const auto& [src, dst] : dict.semantic_phrase) {
        keys.push_back({split_tokens(src), &dst});
    }
    std::sort(keys.begin(), keys.end(),
              [](const Key& a, const Key& b) { return a.tokens.size() > b.tokens.size(); });

    std::vector<std::string> word_text(words.size());
    for (size_t w = 0; w < words.size(); ++w) {
        word_text[w] = detail::render_units(seg.units, words[w].begin, words[w].end);
    }

    std::vector<PhraseSite> sites;
    size_t w = 0;
    while (w < words.size()) {
        const Key* hit = nullptr;
        for (const auto& key : keys) {
            if (w + key.tokens.size() > words.size()) continue;
            bool match = true;
            for (size_t t = 0; t < key.tokens.size() && match; ++t) {
                match = word_text[w + t] == key.tokens[t];
                // consecutive words must be separated by exactly one space
                if (match && t > 0) {
                    match = words[w + t].begin == words[w + t - 1].end + 1 &&
                            seg.units[words[w + t - 1].end].is_space();
                }
            }
            if (match) {
                hit = &key;
                break;
            }
        }
        if (hit) {
            sites.push_back({words[w].begin, words[w + hit->tokens.size() - 1].end,
                             hit->tokens.size(), hit->replacement});
            w += hit->tokens.size();
        } else {
            ++w;
        }
    }
    if (sites.empty()) throw NoEligibleTargetError("no semantic phrase entry matches");

    size_t m = rewrite_budget(tau, sites.size());
    std::vector<size_t> picked = rng.sample_indices(sites.size(), m);
    size_t cap = half_word_cap(words.size());
    std::set<size_t> chosen;
    size_t words_changed = 0;
    for (size_t pick : picked) {
        if (words_changed + sites[pick].word_count > cap) continue;
        words_changed += sites[pick].word_count;
        chosen.insert(pick);
    }
    if (chosen.empty()) throw NoEligibleTargetError("half-word cap leaves no room");

    OutputBuilder out;
    size_t next = 0;
    std::vector<size_t> ordered(chosen.begin(), chosen.end());
    for (size_t i = 0; i < seg.units.size();) {
        if (next < ordered.size() && sites[ordered[next]].begin_unit == i) {
            const PhraseSite& s = sites[ordered[next]];
            out.replace(detail::render_units(seg.units, s.begin_unit, s.end_unit),
                        *s.replacement);
            i = s.end_unit;
            ++next;
        } else {
            out.keep(seg.units[i]);
            ++i;
        }
    }
    return out.done();
}

}  // namespace

Applied transliterate(const std::string& text, TranslitMode mode, double tau, Rng& rng,
                      TranslitBackend* backend, const TranslitDict& dict) {
    if (backend != nullptr) return from_backend(text, mode, *backend);
    SegmentedText seg = segment(text);
    if (mode == TranslitMode::Latin) return latin_offline(seg, tau, rng);
    return semantic_offline(seg, tau, rng, dict);
}

}  // namespace koobf
