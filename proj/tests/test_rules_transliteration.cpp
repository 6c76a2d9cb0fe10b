#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "koobf/errors.hpp"
#include "koobf/hangul.hpp"
#include "koobf/metrics.hpp"
#include "koobf/rules/transliteration.hpp"

using namespace koobf;

namespace {

std::vector<std::string> split_words(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> out;
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

// scripted backend: returns canned outputs and records what it was asked
struct FakeBackend : TranslitBackend {
    std::vector<std::string> calls;
    std::string reply;
    std::string rewrite(const std::string& text, TranslitMode) override {
        calls.push_back(text);
        return reply;
    }
};

}  // namespace

TEST_SUITE("rules.transliteration") {

TEST_CASE("romanize_syllable spot checks") {
    CHECK(romanize_syllable(U'망') == "mang");
    CHECK(romanize_syllable(U'게') == "ge");
    CHECK(romanize_syllable(U'한') == "han");
    CHECK(romanize_syllable(U'읽') == "ik");
    CHECK(romanize_syllable(U'꿀') == "kkul");
    CHECK(romanize_syllable(U'아') == "a");
    CHECK(romanize_syllable(U'빛') == "bit");
}

TEST_CASE("phonetic cjk golden examples") {
    Rng rng(0);
    CHECK(phonetic_cjk("수상해", 0.3, rng).text == "水상해");
    bool hit = false;
    for (uint64_t seed = 0; seed < 32 && !hit; ++seed) {
        Rng scan(seed);
        hit = phonetic_cjk("남한테 관심받고 싶었구나", 0.3, scan).text ==
              "男한테 관심받고 싶었구나";
    }
    CHECK(hit);
}

TEST_CASE("phonetic cjk undoes exactly") {
    Rng rng(13);
    const TranslitDict& dict = default_translit_dict();
    std::string text = "수상한 남자가 산 중턱 문 앞에서 일 년을 기다렸다";
    for (int trial = 0; trial < 30; ++trial) {
        Applied out = phonetic_cjk(text, 0.5, rng);
        CHECK(invert_edits(out.text, {{13, out.edits}}) == text);
        for (const Edit& e : out.edits) CHECK(dict.cjk_phonetic.at(e.before) == e.after);
    }
}

TEST_CASE("phonetic cjk without mapped syllables throws") {
    Rng rng(0);
    CHECK_THROWS_AS(phonetic_cjk("abc", 0.5, rng), NoEligibleTargetError);
    CHECK_THROWS_AS(phonetic_cjk("꿀꿀", 0.5, rng), NoEligibleTargetError);
}

TEST_CASE("offline latin golden example shape") {
    // 게시판을 -> gㅔ시판을 style: roman onset + compat vowel at a word start
    bool hit = false;
    for (uint64_t seed = 0; seed < 64 && !hit; ++seed) {
        Rng rng(seed);
        Applied out = transliterate("게시판을 확인하세요", TranslitMode::Latin, 0.5, rng);
        hit = out.text.rfind("g", 0) == 0 && out.text.find("ㅔ시판을") != std::string::npos;
    }
    CHECK(hit);
}

TEST_CASE("offline latin rewrites at most half the words") {
    Rng rng(3);
    std::string text = "게시판을 확인하고 댓글을 남겨 주세요";
    size_t words = word_token_count(text);
    for (int trial = 0; trial < 50; ++trial) {
        Applied out = transliterate(text, TranslitMode::Latin, 1.0, rng);
        CHECK(out.edits.size() <= (words + 1) / 2);
        CHECK(word_token_count(out.text) == words);
    }
}

TEST_CASE("offline latin borrows only open vowels") {
    // 꿀 has coda ㄹ so the whole syllable romanizes instead of borrowing
    Rng rng(0);
    Applied out = transliterate("꿀", TranslitMode::Latin, 1.0, rng);
    CHECK(out.text == "kkul");
}

TEST_CASE("offline semantic replaces dictionary phrases") {
    bool hit = false;
    for (uint64_t seed = 0; seed < 32 && !hit; ++seed) {
        Rng rng(seed);
        hit = transliterate("한 번만 부탁해", TranslitMode::Semantic, 0.5, rng).text ==
              "한 번만 구다사이";
    }
    CHECK(hit);
    Rng rng(0);
    CHECK(transliterate("제발 가지 말고 있어줘", TranslitMode::Semantic, 0.5, rng).text ==
          "제발 돈트 고 있어줘");
}

TEST_CASE("offline semantic keeps the word token count") {
    const TranslitDict& dict = default_translit_dict();
    for (const auto& [phrase, replacement] : dict.semantic_phrase) {
        CHECK(split_words(phrase).size() == split_words(replacement).size());
    }
    Rng rng(21);
    std::string text = "미안해 그리고 고마워 정말 부탁해";
    for (int trial = 0; trial < 30; ++trial) {
        Applied out = transliterate(text, TranslitMode::Semantic, 0.5, rng);
        CHECK(word_token_count(out.text) == word_token_count(text));
    }
}

TEST_CASE("offline semantic without dictionary hits throws") {
    Rng rng(0);
    CHECK_THROWS_AS(transliterate("전혀 모르는 문장", TranslitMode::Semantic, 0.5, rng),
                    NoEligibleTargetError);
}

TEST_CASE("backend output is accepted when within the rewrite cap") {
    FakeBackend backend;
    backend.reply = "게시판을 check하세요 please";
    // 3 words in, 3 words out, one token in common -> 2 changed = cap for 3 words
    Rng rng(0);
    Applied out = transliterate("게시판을 확인하세요 꼭", TranslitMode::Latin, 0.5, rng,
                                &backend);
    CHECK(out.text == backend.reply);
    REQUIRE(backend.calls.size() == 1);
    CHECK(backend.calls[0] == "게시판을 확인하세요 꼭");
    REQUIRE(out.edits.size() == 1);
    CHECK(out.edits[0].before == "게시판을 확인하세요 꼭");
    CHECK(out.edits[0].after == backend.reply);
}

TEST_CASE("backend echoing the input is rejected") {
    FakeBackend backend;
    backend.reply = "게시판을 확인하세요 꼭";
    Rng rng(0);
    CHECK_THROWS_AS(transliterate("게시판을 확인하세요 꼭", TranslitMode::Latin, 0.5, rng,
                                  &backend),
                    MalformedRemoteResponseError);
}

TEST_CASE("backend rewriting too many words is rejected") {
    FakeBackend backend;
    backend.reply = "one two three four";
    Rng rng(0);
    CHECK_THROWS_AS(transliterate("게시판을 확인하세요 꼭 지금", TranslitMode::Semantic, 0.5,
                                  rng, &backend),
                    MalformedRemoteResponseError);
}

TEST_CASE("backend returning empty output is rejected") {
    FakeBackend backend;
    backend.reply = "";
    Rng rng(0);
    CHECK_THROWS_AS(transliterate("게시판을 확인하세요", TranslitMode::Latin, 0.5, rng,
                                  &backend),
                    MalformedRemoteResponseError);
}

TEST_CASE("word_token_count matches stream splitting") {
    CHECK(word_token_count("") == 0);
    CHECK(word_token_count("하나") == 1);
    CHECK(word_token_count("하나 둘 셋") == 3);
    CHECK(word_token_count("  앞뒤   공백  ") == 2);
}

}  // TEST_SUITE
