#include "koobf/rules/pragmatic.hpp"

#include <algorithm>
#include <map>

#include "koobf/errors.hpp"
#include "koobf/hangul.hpp"
#include "rule_common.hpp"

namespace koobf {

const std::vector<std::string>& default_symbol_pool() {
    static const std::vector<std::string> pool = {"°♡", "《", "》", "≥ㅅ≤", "♥",
                                                  "‥",  "∥", "〃", "◉"};
    return pool;
}

namespace {

constexpr const char* kOpenBracket = "《";
constexpr const char* kCloseBracket = "》";

}  // namespace

Applied insert_symbols(const std::string& text, double tau, Rng& rng,
                       const std::vector<std::string>& pool) {
    if (pool.empty()) throw EmptyPoolError("symbol pool is empty");
    SegmentedText seg = segment(text);
    if (seg.units.empty()) throw NoEligibleTargetError("empty text");

    // stripping pool symbols must recover the input, so texts that already
    // contain one are out
    for (const auto& sym : pool) {
        if (text.find(sym) != std::string::npos) {
            throw NoEligibleTargetError("text already contains a pool symbol");
        }
    }

    std::vector<std::string> singles;
    bool has_brackets = false;
    {
        bool open = false, close = false;
        for (const auto& sym : pool) {
            if (sym == kOpenBracket) {
                open = true;
            } else if (sym == kCloseBracket) {
                close = true;
            } else {
                singles.push_back(sym);
            }
        }
        has_brackets = open && close;
        if (!has_brackets) {
            for (const auto& sym : pool) {
                if (sym == kOpenBracket || sym == kCloseBracket) singles.push_back(sym);
            }
        }
    }

    size_t budget = rewrite_budget(tau, seg.units.size());
    auto words = detail::word_ranges(seg);

    // boundary position p = before unit p; n units expose n + 1 boundaries
    std::map<size_t, std::vector<std::string>> plan;
    if (has_brackets && budget >= 2 && !words.empty() &&
        (singles.empty() || rng.chance(1, 3))) {
        const auto& w = words[rng.below(words.size())];
        plan[w.begin].push_back(kOpenBracket);
        plan[w.end].push_back(kCloseBracket);
        budget -= 2;
    }
    if (!singles.empty() && budget > 0) {
        size_t positions = seg.units.size() + 1;
        size_t k = std::min(budget, positions);
        for (size_t p : rng.sample_indices(positions, k)) {
            plan[p].push_back(rng.pick(singles));
        }
    }
    if (plan.empty()) throw NoEligibleTargetError("budget too small for the bracket pair");

    detail::OutputBuilder out;
    for (size_t i = 0; i <= seg.units.size(); ++i) {
        auto it = plan.find(i);
        if (it != plan.end()) {
            for (const auto& sym : it->second) out.insert(sym);
        }
        if (i < seg.units.size()) out.keep(seg.units[i]);
    }
    return out.done();
}

}  // namespace koobf
