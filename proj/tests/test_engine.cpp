#include <doctest.h>

#include <algorithm>
#include <set>

#include "koobf/engine.hpp"
#include "koobf/errors.hpp"

using namespace koobf;

namespace {

const std::vector<std::pair<std::string, std::string>> kPairs = {
    {"한국인들만 알아볼 수 있게 바꿔줘", "진짜 어이없네 너무하다 정말"},
    {"오랜만에 바다를 보러 간다", "눈물이 났다 수상한 남자 때문에"},
    {"게시판을 확인하고 부탁해", "관심을 받고 싶었구나 한심하다"},
    {"시험관 아기 시술이 열린다", "멍청한 비버 같은 소리 하네"},
};

}  // namespace

TEST_SUITE("engine") {

TEST_CASE("rule table is complete and ordered") {
    const auto& rules = default_rules();
    REQUIRE(rules.size() == 17);
    for (int id = 1; id <= 17; ++id) {
        CHECK(rules[id - 1].id == id);
        CHECK(rule_by_id(id).id == id);
        CHECK(!rules[id - 1].name.empty());
        CHECK((rules[id - 1].tau == 0.3 || rules[id - 1].tau == 0.5));
    }
    CHECK_THROWS(rule_by_id(0));
    CHECK_THROWS(rule_by_id(18));
}

TEST_CASE("published rewrite rates") {
    const std::set<int> low = {2, 5, 8, 9, 11, 13, 16};  // tau 0.3
    for (const auto& rule : default_rules()) {
        CHECK(rule.tau == (low.count(rule.id) ? 0.3 : 0.5));
    }
}

TEST_CASE("category ranges") {
    for (const auto& rule : default_rules()) {
        RuleCategory want = rule.id <= 8    ? RuleCategory::Phonological
                            : rule.id <= 11 ? RuleCategory::Iconological
                            : rule.id <= 14 ? RuleCategory::Transliteration
                            : rule.id <= 16 ? RuleCategory::Syntactic
                                            : RuleCategory::Pragmatic;
        CHECK(rule.category == want);
    }
}

TEST_CASE("rule names are distinct") {
    std::set<std::string> names;
    for (const auto& rule : default_rules()) names.insert(rule.name);
    CHECK(names.size() == 17);
}

TEST_CASE("apply_rule honors a tau override") {
    EngineContext ctx;
    Rng a(4), b(4);
    Applied full = apply_rule("한국인들만 알아볼 수", rule_by_id(1), 1.0, a, ctx);
    Applied spec = apply_rule("한국인들만 알아볼 수", rule_by_id(1), -1.0, b, ctx);
    CHECK(full.edits.size() == 4);
    CHECK(spec.edits.size() == 2);  // ceil(0.5 * 4)
}

TEST_CASE("sanity_check rejects each failure mode") {
    std::vector<int> applied = {3};
    // accepted baseline
    CHECK(sanity_check("드러봐", "밥오", "들어봐", "바보", applied, 8));
    // rule already applied
    CHECK(!sanity_check("드러봐", "밥오", "들어봐", "바보", applied, 3));
    // one side unchanged
    CHECK(!sanity_check("들어봐", "밥오", "들어봐", "바보", applied, 8));
    CHECK(!sanity_check("드러봐", "바보", "들어봐", "바보", applied, 8));
    // a side lost every Hangul-or-letter unit
    CHECK(!sanity_check("들어봐", "바보", "1 2!", "밥오", applied, 8));
    CHECK(!sanity_check("들어봐", "바보", "", "밥오", applied, 8));
    // length blow-up past the ratio cap
    std::string bloated(40, 'x');
    CHECK(!sanity_check("가", "바보", bloated + "가", "밥오", applied, 8));
}

TEST_CASE("sanity_check counts hanja and compat jamo as letters") {
    std::vector<int> applied;
    CHECK(sanity_check("水水水", "가나", "수수수", "나가", applied, 13));
    CHECK(sanity_check("ㄱㅏ!", "가나", "가!", "나가", applied, 1));
    CHECK(sanity_check("abc", "가나", "가방", "나가", applied, 12));
}

TEST_CASE("obfuscate_pair applies exactly k distinct rules") {
    EngineContext ctx;
    const auto& rules = default_rules();
    for (int k = 1; k <= 4; ++k) {
        for (uint64_t seed = 0; seed < 25; ++seed) {
            const auto& [neutral, toxic] = kPairs[seed % kPairs.size()];
            Rng rng(derive_seed(7, seed, k));
            ObfuscationResult res;
            try {
                res = obfuscate_pair(neutral, toxic, k, rules, rng, ctx);
            } catch (const IncompleteError&) {
                continue;  // legitimate when candidates run out
            }
            CHECK(res.level == k);
            CHECK(res.applied_rules.size() == static_cast<size_t>(k));
            std::set<int> distinct(res.applied_rules.begin(), res.applied_rules.end());
            CHECK(distinct.size() == static_cast<size_t>(k));
            CHECK(res.traces.size() == static_cast<size_t>(k));
            for (size_t i = 0; i < res.traces.size(); ++i) {
                CHECK(res.traces[i].rule_id == res.applied_rules[i]);
            }
            CHECK(res.neutral_obf != neutral);
            CHECK(res.toxic_obf != toxic);
            CHECK(!res.neutral_obf.empty());
            CHECK(!res.toxic_obf.empty());
        }
    }
}

TEST_CASE("obfuscate_pair is deterministic under a fixed seed") {
    EngineContext ctx;
    const auto& rules = default_rules();
    for (int k = 2; k <= 3; ++k) {
        Rng a(derive_seed(11, 0, k)), b(derive_seed(11, 0, k));
        ObfuscationResult ra = obfuscate_pair(kPairs[0].first, kPairs[0].second, k, rules, a, ctx);
        ObfuscationResult rb = obfuscate_pair(kPairs[0].first, kPairs[0].second, k, rules, b, ctx);
        CHECK(ra.neutral_obf == rb.neutral_obf);
        CHECK(ra.toxic_obf == rb.toxic_obf);
        CHECK(ra.applied_rules == rb.applied_rules);
    }
}

TEST_CASE("obfuscate_pair reports exhaustion with the progress made") {
    EngineContext ctx;
    const auto& rules = default_rules();
    // letter-free sides: every rule either finds no target or fails the
    // letter-survival condition
    Rng rng(1);
    try {
        obfuscate_pair("1 2 3", "4 5 6", 2, rules, rng, ctx);
        FAIL("expected IncompleteError");
    } catch (const IncompleteError& e) {
        CHECK(e.applied == 0);
        CHECK(std::string(e.what()).find("pass") != std::string::npos);
    }
}

TEST_CASE("obfuscate_pair leaves single-rule traces replayable") {
    EngineContext ctx;
    const auto& rules = default_rules();
    size_t checked = 0;
    for (uint64_t seed = 0; seed < 40; ++seed) {
        const auto& [neutral, toxic] = kPairs[seed % kPairs.size()];
        Rng rng(derive_seed(3, seed, 1));
        ObfuscationResult res;
        try {
            res = obfuscate_pair(neutral, toxic, 1, rules, rng, ctx);
        } catch (const IncompleteError&) {
            continue;
        }
        REQUIRE(res.traces.size() == 1);
        const RuleTrace& t = res.traces[0];
        for (const Edit& e : t.neutral_edits) {
            CHECK(res.neutral_obf.substr(e.offset, e.after.size()) == e.after);
        }
        for (const Edit& e : t.toxic_edits) {
            CHECK(res.toxic_obf.substr(e.offset, e.after.size()) == e.after);
        }
        ++checked;
    }
    CHECK(checked > 30);
}

TEST_CASE("custom symbol pools flow through rule 17") {
    EngineContext ctx;
    ctx.symbol_pool = {"★"};
    bool hit = false;
    for (uint64_t seed = 0; seed < 200 && !hit; ++seed) {
        Rng rng(seed);
        Applied out = apply_rule("가나다 라마", rule_by_id(17), -1.0, rng, ctx);
        hit = out.text.find("★") != std::string::npos;
        CHECK(out.text.find("♥") == std::string::npos);
    }
    CHECK(hit);
}

}  // TEST_SUITE
