#include "koobf/rules/syntactic.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "koobf/errors.hpp"
#include "koobf/hangul.hpp"
#include "rule_common.hpp"

namespace koobf {

namespace {

using detail::OutputBuilder;

struct Boundary {
    size_t unit;   // left unit index
    bool insert;   // true: add a space after it, false: drop the space unit+1
};

}  // namespace

Applied perturb_spacing(const std::string& text, double tau, Rng& rng) {
    SegmentedText seg = segment(text);
    if (seg.syllable_count() < 2) throw NoEligibleTargetError("fewer than two syllables");

    std::vector<Boundary> boundaries;
    for (size_t i = 0; i + 1 < seg.units.size(); ++i) {
        const Unit& a = seg.units[i];
        if (!a.is_syllable()) continue;
        if (seg.units[i + 1].is_syllable()) {
            boundaries.push_back({i, true});
        } else if (seg.units[i + 1].is_space() && i + 2 < seg.units.size() &&
                   seg.units[i + 2].is_syllable()) {
            boundaries.push_back({i, false});
        }
    }
    if (boundaries.empty()) throw NoEligibleTargetError("no editable syllable boundary");

    size_t m = rewrite_budget(tau, boundaries.size());
    std::set<size_t> chosen;
    for (size_t pick : rng.sample_indices(boundaries.size(), m)) chosen.insert(pick);

    // map unit index -> boundary decision for single left-to-right emission
    std::map<size_t, bool> decision;
    for (size_t c : chosen) decision[boundaries[c].unit] = boundaries[c].insert;

    OutputBuilder out;
    for (size_t i = 0; i < seg.units.size(); ++i) {
        out.keep(seg.units[i]);
        auto it = decision.find(i);
        if (it == decision.end()) continue;
        if (it->second) {
            out.insert(" ");
        } else {
            out.erase(detail::render_unit(seg.units[i + 1]));
            ++i;
        }
    }
    return out.done();
}

Applied syllable_anagram(const std::string& text, double tau, Rng& rng) {
    SegmentedText seg = segment(text);
    auto words = detail::word_ranges(seg);

    // a word is eligible when some adjacent internal pair renders differently
    // after the swap; the first syllable anchors the word shape
    struct Site {
        size_t word;
        std::vector<size_t> pairs;  // unit index of the left element
    };
    std::vector<Site> sites;
    for (size_t w = 0; w < words.size(); ++w) {
        if (words[w].syllables < 3) continue;
        std::vector<size_t> pairs;
        for (size_t i = words[w].begin + 1; i + 1 < words[w].end; ++i) {
            if (!seg.units[i].is_syllable() || !seg.units[i + 1].is_syllable()) continue;
            if (detail::render_unit(seg.units[i]) != detail::render_unit(seg.units[i + 1])) {
                pairs.push_back(i);
            }
        }
        if (!pairs.empty()) sites.push_back({w, std::move(pairs)});
    }
    if (sites.empty()) throw NoEligibleTargetError("no word admits an internal swap");

    size_t m = rewrite_budget(tau, sites.size());
    std::map<size_t, size_t> swap_at;  // left unit index of the swapped pair, keyed by word
    for (size_t pick : rng.sample_indices(sites.size(), m)) {
        const Site& s = sites[pick];
        swap_at[s.pairs[rng.below(s.pairs.size())]] = s.word;
    }

    OutputBuilder out;
    for (size_t i = 0; i < seg.units.size(); ++i) {
        auto it = swap_at.find(i);
        if (it != swap_at.end()) {
            std::string before = detail::render_units(seg.units, i, i + 2);
            out.replace(before, detail::render_unit(seg.units[i + 1]) +
                                    detail::render_unit(seg.units[i]));
            ++i;
        } else {
            out.keep(seg.units[i]);
        }
    }
    return out.done();
}

}  // namespace koobf
