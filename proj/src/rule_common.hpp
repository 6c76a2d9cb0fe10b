#pragma once

// Internal helpers shared by the rule implementations. Not installed.

#include <string>
#include <vector>

#include "koobf/edits.hpp"
#include "koobf/hangul.hpp"

namespace koobf::detail {

// Emits the output string left to right while recording edits whose offsets
// point into that output; Edit offsets end up nondecreasing, which is what
// invert() relies on.
struct OutputBuilder {
    std::string text;
    std::vector<Edit> edits;

    void keep(const Unit& u) { text += encode_utf8(u.scalar); }
    void keep(const std::string& s) { text += s; }
    void replace(const std::string& before, const std::string& after) {
        edits.push_back(Edit{text.size(), before, after});
        text += after;
    }
    void insert(const std::string& sym) { replace("", sym); }
    void erase(const std::string& before) { replace(before, ""); }

    Applied done() { return Applied{std::move(text), std::move(edits)}; }
};

inline std::string render_unit(const Unit& u) { return encode_utf8(u.scalar); }

inline std::string render_units(const std::vector<Unit>& units, size_t begin, size_t end) {
    std::string s;
    for (size_t i = begin; i < end; ++i) s += encode_utf8(units[i].scalar);
    return s;
}

// [start, end) ranges of maximal non-space runs
struct WordRange {
    size_t begin = 0;
    size_t end = 0;
    size_t syllables = 0;
};

inline std::vector<WordRange> word_ranges(const SegmentedText& seg) {
    std::vector<WordRange> words;
    size_t i = 0;
    while (i < seg.units.size()) {
        if (seg.units[i].is_space()) {
            ++i;
            continue;
        }
        WordRange w;
        w.begin = i;
        while (i < seg.units.size() && !seg.units[i].is_space()) {
            w.syllables += seg.units[i].is_syllable();
            ++i;
        }
        w.end = i;
        words.push_back(w);
    }
    return words;
}

}  // namespace koobf::detail
