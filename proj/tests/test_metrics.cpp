#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "koobf/errors.hpp"
#include "koobf/hangul.hpp"
#include "koobf/metrics.hpp"
#include "koobf/rules/iconological.hpp"
#include "koobf/rules/pragmatic.hpp"

using namespace koobf;

namespace {

// reference implementation kept deliberately naive: count maps per order,
// clipped overlap, macro average
double reference_chrf(const std::string& hypothesis, const std::string& reference, int max_n,
                      double beta) {
    auto strip = [](const std::string& s) {
        std::u32string out;
        for (char32_t c : decode_utf8(s)) {
            bool ws = (c >= 0x09 && c <= 0x0D) || c == 0x20 || c == 0xA0 || c == 0x3000;
            if (!ws) out += c;
        }
        return out;
    };
    std::u32string hyp = strip(hypothesis);
    std::u32string ref = strip(reference);
    double p_sum = 0.0, r_sum = 0.0;
    int orders = 0;
    for (int n = 1; n <= max_n; ++n) {
        std::map<std::u32string, int> h, r;
        for (size_t i = 0; i + n <= hyp.size(); ++i) ++h[hyp.substr(i, n)];
        for (size_t i = 0; i + n <= ref.size(); ++i) ++r[ref.substr(i, n)];
        size_t h_total = hyp.size() >= static_cast<size_t>(n) ? hyp.size() - n + 1 : 0;
        size_t r_total = ref.size() >= static_cast<size_t>(n) ? ref.size() - n + 1 : 0;
        if (h_total == 0 && r_total == 0) continue;
        size_t overlap = 0;
        for (const auto& [gram, count] : h) {
            auto it = r.find(gram);
            if (it != r.end()) overlap += std::min(count, it->second);
        }
        p_sum += h_total ? static_cast<double>(overlap) / h_total : 0.0;
        r_sum += r_total ? static_cast<double>(overlap) / r_total : 0.0;
        ++orders;
    }
    if (orders == 0) return 0.0;
    double p = p_sum / orders, r = r_sum / orders;
    double b2 = beta * beta;
    return (b2 * p + r) == 0.0 ? 0.0 : 100.0 * (1 + b2) * p * r / (b2 * p + r);
}

struct FrozenCase {
    const char* hyp;
    const char* ref;
    int max_n;
    double beta;
    double want;
};

}  // namespace

TEST_SUITE("metrics") {

TEST_CASE("chrf frozen scores") {
    static const FrozenCase cases[] = {
        {"abcd", "abce", 6, 2, 47.916666666667},
        {"abcd", "abcd", 6, 2, 100.0},
        {"a", "a", 6, 2, 100.0},
        {"xyz", "abc", 6, 2, 0.0},
        {"the cat sat", "the cat sat on the mat", 6, 2, 49.593484099660},
        {"the cat", "the cut", 6, 2, 37.777777777778},
        {"kitten", "sitting", 6, 2, 19.025078890550},
        {"kitten", "sitting", 3, 2, 38.050157781099},
        {"kitten", "sitting", 6, 1, 20.024035835245},
        {"abcdef", "abcdef ", 6, 2, 100.0},
        {"바보", "바보", 6, 2, 100.0},
        {"바보야", "바부야", 6, 2, 22.222222222222},
        {"눈물이 났다", "눈물이 흘렀다", 6, 2, 22.829676810569},
        {"드러봐", "들어봐", 6, 2, 11.111111111111},
        {"할찌시가", "할 짓이가", 6, 2, 12.500000000000},
        {"커엽다", "귀엽다", 6, 2, 38.888888888889},
        {"한꾹인뜰만 알아뽈 쑤", "한국인들만 알아볼 수", 6, 2, 15.806878306878},
        {"水상해", "수상해", 6, 2, 38.888888888889},
        {"게시판을 확인하세요", "gㅔ시판을 확in하세yo", 6, 2, 20.716110388127},
        {"룸곡", "눈물", 6, 2, 0.0},
    };
    for (const auto& c : cases) {
        CAPTURE(c.hyp);
        CAPTURE(c.ref);
        double got = chrf(c.hyp, c.ref, c.max_n, c.beta);
        CHECK(std::fabs(got - c.want) <= 1e-6);
    }
}

TEST_CASE("chrf agrees with a naive reference implementation") {
    Rng rng(77);
    const std::u32string alphabet = U"가나다라마바바사아자차 카타파하abcde 12";
    for (int trial = 0; trial < 400; ++trial) {
        auto draw = [&] {
            std::u32string s;
            size_t len = 1 + rng.below(14);
            for (size_t i = 0; i < len; ++i) s += alphabet[rng.below(alphabet.size())];
            return encode_utf8(s);
        };
        std::string hyp = draw();
        std::string ref = draw();
        int max_n = 1 + static_cast<int>(rng.below(6));
        double beta = (trial % 3 == 0) ? 1.0 : 2.0;
        try {
            double got = chrf(hyp, ref, max_n, beta);
            CHECK(got == doctest::Approx(reference_chrf(hyp, ref, max_n, beta)).epsilon(1e-9));
        } catch (const EmptyReferenceError&) {
            // whitespace-only reference; the naive version cannot score it either
        }
    }
}

TEST_CASE("chrf identity and argument order") {
    CHECK(chrf("같은 문장", "같은 문장") == doctest::Approx(100.0));
    // asymmetric because recall is weighted by beta
    CHECK(chrf("the cat sat", "the cat sat on the mat") !=
          doctest::Approx(chrf("the cat sat on the mat", "the cat sat")));
}

TEST_CASE("chrf whitespace insensitivity") {
    CHECK(chrf("한 국 인", "한국인") == doctest::Approx(100.0));
    CHECK(chrf("한\t국\n인", "한국인") == doctest::Approx(100.0));
    double spaced = chrf("할찌시가", "할 짓이가");
    CHECK(chrf("할찌시가", "할짓이가") == doctest::Approx(spaced));
}

TEST_CASE("chrf empty handling") {
    CHECK_THROWS_AS(chrf("abc", ""), EmptyReferenceError);
    CHECK_THROWS_AS(chrf("abc", "   "), EmptyReferenceError);
    CHECK(chrf("", "abc") == doctest::Approx(0.0));
    CHECK(chrf("   ", "abc") == doctest::Approx(0.0));
}

TEST_CASE("corpus chrf micro-averages") {
    std::vector<std::string> hyps = {"abcd", "xyz"};
    std::vector<std::string> refs = {"abcd", "abc"};
    double corpus = corpus_chrf(hyps, refs);
    double mean = (chrf("abcd", "abcd") + chrf("xyz", "abc")) / 2.0;
    CHECK(corpus != doctest::Approx(mean));
    CHECK(corpus_chrf({"바보"}, {"바보"}) == doctest::Approx(chrf("바보", "바보")));
    CHECK(corpus_chrf({"드러봐"}, {"들어봐"}) == doctest::Approx(chrf("드러봐", "들어봐")));
}

TEST_CASE("corpus chrf input validation") {
    CHECK_THROWS_AS(corpus_chrf({"a", "b"}, {"a"}), std::invalid_argument);
    CHECK_THROWS_AS(corpus_chrf({}, {}), EmptyCorpusError);
    CHECK_THROWS_AS(corpus_chrf({"a"}, {" "}), EmptyReferenceError);
    // a single empty reference is tolerated when others carry grams
    CHECK_NOTHROW(corpus_chrf({"a", "b"}, {"", "b"}));
}

TEST_CASE("invertible rule set") {
    const std::set<int> expected = {9, 10, 11, 13, 15, 17};
    for (int id = 1; id <= 17; ++id) {
        CHECK(rule_invertible(id) == (expected.count(id) > 0));
    }
    CHECK(!rule_invertible(0));
    CHECK(!rule_invertible(18));
}

TEST_CASE("invert replays stacked traces newest-first") {
    std::string neutral = "눈물이 났다";
    std::string toxic = "비버 눈물 바보";
    Rng rng(9);
    Applied n1 = rotate(neutral, RotationAngle::Any, 0.3, rng);
    Applied t1 = rotate(toxic, RotationAngle::Any, 0.3, rng);
    Applied n2 = insert_symbols(n1.text, 0.5, rng);
    Applied t2 = insert_symbols(t1.text, 0.5, rng);
    std::vector<RuleTrace> traces = {{11, n1.edits, t1.edits}, {17, n2.edits, t2.edits}};
    CHECK(invert(n2.text, traces, false) == neutral);
    CHECK(invert(t2.text, traces, true) == toxic);
}

TEST_CASE("invert rejects non-invertible traces outright") {
    std::vector<RuleTrace> traces = {{11, {}, {}}, {16, {}, {}}};
    CHECK_THROWS_AS(invert("무엇이든", traces, false), NonInvertibleRuleError);
}

TEST_CASE("invert detects tampered text") {
    Rng rng(4);
    std::string text = "눈물이 났다";
    Applied out = rotate(text, RotationAngle::Any, 0.5, rng);
    std::string tampered = out.text;
    tampered[0] = tampered[0] == 'x' ? 'y' : 'x';
    std::vector<RuleTrace> traces = {{11, out.edits, out.edits}};
    CHECK_THROWS_AS(invert(tampered, traces, false), std::invalid_argument);
}

}  // TEST_SUITE
