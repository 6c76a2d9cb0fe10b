#include <doctest.h>

#include <algorithm>
#include <set>

#include "koobf/errors.hpp"
#include "koobf/hangul.hpp"
#include "koobf/metrics.hpp"
#include "koobf/rules/pragmatic.hpp"
#include "koobf/rules/syntactic.hpp"

using namespace koobf;

namespace {

std::string strip_spaces(const std::string& text) {
    std::string out;
    for (char c : text) {
        if (c != ' ') out += c;
    }
    return out;
}

std::string strip_pool_symbols(const std::string& text, const std::vector<std::string>& pool) {
    std::string out = text;
    for (const auto& sym : pool) {
        size_t at;
        while ((at = out.find(sym)) != std::string::npos) out.erase(at, sym.size());
    }
    return out;
}

std::multiset<char32_t> syllable_multiset(const std::string& text) {
    std::multiset<char32_t> out;
    for (const Unit& u : segment(text).units) {
        if (u.is_syllable()) out.insert(u.scalar);
    }
    return out;
}

const std::vector<std::string> kCorpus = {
    "한국인들만 알아볼 수 있게",  "오랜만에 바다를 보러 간다",
    "진짜 어이없네 너무하다",     "관심을 받고 싶었구나",
    "시험관 아기 시술이 열리다",  "눈물이 났다 정말로",
};

}  // namespace

TEST_SUITE("rules.syntactic") {

TEST_CASE("spacing keeps the space-stripped text") {
    Rng rng(3);
    for (int trial = 0; trial < 120; ++trial) {
        const std::string& text = kCorpus[trial % kCorpus.size()];
        Applied out = perturb_spacing(text, 0.5, rng);
        CHECK(strip_spaces(out.text) == strip_spaces(text));
        CHECK(out.text != text);
    }
}

TEST_CASE("spacing golden example is reachable") {
    bool hit = false;
    for (uint64_t seed = 0; seed < 4096 && !hit; ++seed) {
        Rng rng(seed);
        hit = perturb_spacing("한국인들만 알아볼 수", 0.5, rng).text == "한국 인들만알아 볼수";
    }
    CHECK(hit);
}

TEST_CASE("spacing respects the boundary budget") {
    std::string text = "가나다라 마바사";  // 7 syllables -> 6 boundaries
    Rng rng(9);
    for (int trial = 0; trial < 80; ++trial) {
        Applied out = perturb_spacing(text, 0.3, rng);
        CHECK(out.edits.size() <= 2);  // ceil(0.3 * 6)
        CHECK(!out.edits.empty());
    }
}

TEST_CASE("spacing needs two syllables") {
    Rng rng(0);
    CHECK_THROWS_AS(perturb_spacing("가", 0.5, rng), NoEligibleTargetError);
    CHECK_THROWS_AS(perturb_spacing("a b c", 0.5, rng), NoEligibleTargetError);
}

TEST_CASE("spacing edits undo exactly") {
    Rng rng(27);
    for (int trial = 0; trial < 60; ++trial) {
        const std::string& text = kCorpus[trial % kCorpus.size()];
        Applied out = perturb_spacing(text, 0.5, rng);
        CHECK(invert_edits(out.text, {{15, out.edits}}) == text);
    }
}

TEST_CASE("anagram golden example is reachable") {
    bool hit = false;
    for (uint64_t seed = 0; seed < 256 && !hit; ++seed) {
        Rng rng(seed);
        hit = syllable_anagram("오랜만에 바다", 0.5, rng).text == "오만랜에 바다";
    }
    CHECK(hit);
}

TEST_CASE("anagram keeps the first syllable of every word") {
    Rng rng(15);
    for (int trial = 0; trial < 120; ++trial) {
        const std::string& text = kCorpus[trial % kCorpus.size()];
        Applied out;
        try {
            out = syllable_anagram(text, 0.5, rng);
        } catch (const NoEligibleTargetError&) {
            continue;
        }
        SegmentedText a = segment(text);
        SegmentedText b = segment(out.text);
        REQUIRE(a.units.size() == b.units.size());
        bool word_start = true;
        for (size_t i = 0; i < a.units.size(); ++i) {
            if (!a.units[i].is_syllable()) {
                word_start = true;
                continue;
            }
            if (word_start) CHECK(a.units[i].scalar == b.units[i].scalar);
            word_start = false;
        }
    }
}

TEST_CASE("anagram permutes syllables without changing the multiset") {
    Rng rng(33);
    for (int trial = 0; trial < 120; ++trial) {
        const std::string& text = kCorpus[trial % kCorpus.size()];
        try {
            Applied out = syllable_anagram(text, 0.5, rng);
            CHECK(syllable_multiset(out.text) == syllable_multiset(text));
            CHECK(out.text != text);
        } catch (const NoEligibleTargetError&) {
        }
    }
}

TEST_CASE("anagram needs a word with an internal pair that renders differently") {
    Rng rng(0);
    CHECK_THROWS_AS(syllable_anagram("가나 다라", 0.5, rng), NoEligibleTargetError);
    CHECK_THROWS_AS(syllable_anagram("하하하 호호호", 0.5, rng), NoEligibleTargetError);
}

}  // TEST_SUITE

TEST_SUITE("rules.pragmatic") {

TEST_CASE("stripping pool symbols recovers the input") {
    const auto& pool = default_symbol_pool();
    Rng rng(21);
    for (int trial = 0; trial < 120; ++trial) {
        const std::string& text = kCorpus[trial % kCorpus.size()];
        Applied out = insert_symbols(text, 0.5, rng);
        CHECK(strip_pool_symbols(out.text, pool) == text);
        CHECK(out.text != text);
    }
}

TEST_CASE("symbol insertions respect the unit budget") {
    std::string text = "가나다";  // 3 units
    Rng rng(5);
    for (int trial = 0; trial < 80; ++trial) {
        Applied out = insert_symbols(text, 0.5, rng);
        CHECK(out.edits.size() <= 2);  // ceil(0.5 * 3)
    }
}

TEST_CASE("brackets come in balanced pairs around a word") {
    Rng rng(8);
    size_t bracketed = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const std::string& text = kCorpus[trial % kCorpus.size()];
        Applied out = insert_symbols(text, 0.5, rng);
        size_t open = 0, close = 0, at = 0;
        while ((at = out.text.find("《", at)) != std::string::npos) { ++open; at += 3; }
        at = 0;
        while ((at = out.text.find("》", at)) != std::string::npos) { ++close; at += 3; }
        CHECK(open == close);
        if (open > 0) {
            ++bracketed;
            size_t a = out.text.find("《");
            size_t b = out.text.find("》");
            CHECK(a < b);
            // the enclosed span is a single word
            std::string inner = out.text.substr(a + 3, b - a - 3);
            CHECK(inner.find(' ') == std::string::npos);
            CHECK(!inner.empty());
        }
    }
    CHECK(bracketed > 0);
    CHECK(bracketed < 300);  // singles must be drawn too
}

TEST_CASE("symbol edits undo exactly") {
    Rng rng(44);
    for (int trial = 0; trial < 60; ++trial) {
        const std::string& text = kCorpus[trial % kCorpus.size()];
        Applied out = insert_symbols(text, 0.5, rng);
        CHECK(invert_edits(out.text, {{17, out.edits}}) == text);
    }
}

TEST_CASE("custom pools are honored") {
    std::vector<std::string> pool = {"~", "*"};
    Rng rng(2);
    Applied out = insert_symbols("가나다라", 1.0, rng, pool);
    CHECK(out.text != "가나다라");
    CHECK(strip_pool_symbols(out.text, pool) == "가나다라");
}

TEST_CASE("pool and eligibility errors") {
    Rng rng(0);
    CHECK_THROWS_AS(insert_symbols("가나다", 0.5, rng, {}), EmptyPoolError);
    CHECK_THROWS_AS(insert_symbols("", 0.5, rng), NoEligibleTargetError);
    // text already containing a pool symbol cannot be recovered by stripping
    CHECK_THROWS_AS(insert_symbols("가나♥다", 0.5, rng), NoEligibleTargetError);
}

}  // TEST_SUITE
