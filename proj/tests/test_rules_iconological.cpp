#include <doctest.h>

#include <algorithm>
#include <functional>

#include "koobf/errors.hpp"
#include "koobf/hangul.hpp"
#include "koobf/metrics.hpp"
#include "koobf/rules/iconological.hpp"

using namespace koobf;

namespace {

bool seed_scan(const std::function<std::string(Rng&)>& run, const std::string& want,
               uint64_t max_seed = 256) {
    for (uint64_t seed = 0; seed < max_seed; ++seed) {
        Rng rng(seed);
        try {
            if (run(rng) == want) return true;
        } catch (const NoEligibleTargetError&) {
            return false;
        }
    }
    return false;
}

}  // namespace

TEST_SUITE("rules.iconological") {

TEST_CASE("character lookalike golden example") {
    CHECK(seed_scan(
        [](Rng& rng) { return lookalike("귀엽다", LookalikeLevel::Character,
                                        LookalikeScript::Hangeul, 0.3, rng).text; },
        "커엽다"));
}

TEST_CASE("character lookalike only rewrites dictionary keys") {
    const GlyphDict& dict = default_glyph_dict();
    Rng rng(41);
    std::string text = "귀여운 명작의 비밀 점수";
    for (int trial = 0; trial < 50; ++trial) {
        Applied out = lookalike(text, LookalikeLevel::Character, LookalikeScript::Hangeul,
                                0.5, rng);
        for (const Edit& e : out.edits) {
            auto it = dict.hangeul_lookalike.find(e.before);
            REQUIRE(it != dict.hangeul_lookalike.end());
            CHECK(std::count(it->second.begin(), it->second.end(), e.after) == 1);
        }
        CHECK(!out.edits.empty());
    }
}

TEST_CASE("subsyllabic lookalike spells out every selected jamo") {
    // 쭈 is character-mapped; subsyllabic mode must still use symbol parts
    const GlyphDict& dict = default_glyph_dict();
    Rng rng(7);
    Applied out = lookalike("가나다", LookalikeLevel::Subsyllabic, LookalikeScript::Cross,
                            1.0, rng);
    CHECK(out.edits.size() == 3);
    for (const Edit& e : out.edits) {
        JamoTriple j = decompose(decode_utf8(e.before)[0]);
        std::string want = dict.subsyl_consonant.at(j.initial) + dict.subsyl_vowel.at(j.medial);
        if (j.final != 0) want += dict.subsyl_consonant.at(final_to_initial(j.final));
        CHECK(e.after == want);
    }
}

TEST_CASE("cross_script golden example is deterministic") {
    // 꾸 and 미 have no usable rendering, so 쭈 is the only candidate
    for (uint64_t seed = 0; seed < 8; ++seed) {
        Rng rng(seed);
        CHECK(cross_script("쭈꾸미", 0.5, rng).text == "卒꾸미");
    }
}

TEST_CASE("rotation golden examples") {
    CHECK(seed_scan(
        [](Rng& rng) { return rotate("눈물", RotationAngle::Half, 0.3, rng).text; }, "룸곡"));
    CHECK(seed_scan(
        [](Rng& rng) { return rotate("비버", RotationAngle::Quarter, 0.3, rng).text; }, "뜨또"));
    CHECK(seed_scan(
        [](Rng& rng) { return rotate("눈물", RotationAngle::Any, 0.3, rng).text; }, "룸곡"));
}

TEST_CASE("half rotation is an involution over the symmetric table") {
    const GlyphDict& dict = default_glyph_dict();
    size_t checked = 0;
    for (const auto& [from, to] : dict.rot180) {
        std::string pair = from + from;  // run of two mapped syllables
        Rng rng(0);
        Applied once = rotate(pair, RotationAngle::Half, 1.0, rng);
        CHECK(once.text == to + to);
        Rng rng2(0);
        Applied twice = rotate(once.text, RotationAngle::Half, 1.0, rng2);
        CHECK(twice.text == pair);
        ++checked;
    }
    CHECK(checked >= 8);
}

TEST_CASE("half rotation reverses the span") {
    Rng rng(0);
    CHECK(rotate("눈물문", RotationAngle::Half, 1.0, rng).text == "곰룸곡");
}

TEST_CASE("quarter rotation maps in place without reversing") {
    Rng rng(0);
    CHECK(rotate("비버비", RotationAngle::Quarter, 1.0, rng).text == "뜨또뜨");
}

TEST_CASE("half rotation needs a run of at least two") {
    Rng rng(0);
    CHECK_THROWS_AS(rotate("눈 물", RotationAngle::Half, 0.5, rng), NoEligibleTargetError);
    CHECK_NOTHROW(rotate("비 버", RotationAngle::Quarter, 0.5, rng));
}

TEST_CASE("iconological edits undo exactly") {
    Rng rng(59);
    const std::vector<std::string> corpus = {"귀엽다 진짜", "쭈꾸미 먹자", "눈물이 비버",
                                             "가나다 점수", "멍멍이 유명해"};
    for (int trial = 0; trial < 40; ++trial) {
        const std::string& text = corpus[trial % corpus.size()];
        try {
            Applied a = lookalike(text, LookalikeLevel::Character, LookalikeScript::Hangeul,
                                  0.5, rng);
            CHECK(invert_edits(a.text, {{9, a.edits}}) == text);
        } catch (const NoEligibleTargetError&) {
        }
        try {
            Applied b = cross_script(text, 0.5, rng);
            CHECK(invert_edits(b.text, {{10, b.edits}}) == text);
        } catch (const NoEligibleTargetError&) {
        }
        try {
            Applied c = rotate(text, RotationAngle::Any, 0.5, rng);
            CHECK(invert_edits(c.text, {{11, c.edits}}) == text);
        } catch (const NoEligibleTargetError&) {
        }
    }
}

TEST_CASE("unmappable text throws") {
    Rng rng(0);
    CHECK_THROWS_AS(lookalike("abc", LookalikeLevel::Character, LookalikeScript::Hangeul,
                              0.5, rng),
                    NoEligibleTargetError);
    CHECK_THROWS_AS(rotate("하하하", RotationAngle::Half, 0.5, rng), NoEligibleTargetError);
}

}  // TEST_SUITE
