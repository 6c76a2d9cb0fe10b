#include "koobf/rules/iconological.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "koobf/errors.hpp"
#include "koobf/hangul.hpp"
#include "rule_common.hpp"

namespace koobf {

namespace {

using detail::OutputBuilder;

bool subsyl_renderable(const JamoTriple& j, const GlyphDict& dict) {
    if (!dict.subsyl_consonant.count(j.initial)) return false;
    if (!dict.subsyl_vowel.count(j.medial)) return false;
    if (j.final == 0) return true;
    int init = final_to_initial(j.final);
    return init >= 0 && dict.subsyl_consonant.count(init);
}

std::string subsyl_render(const JamoTriple& j, const GlyphDict& dict) {
    std::string out = dict.subsyl_consonant.at(j.initial);
    out += dict.subsyl_vowel.at(j.medial);
    if (j.final != 0) out += dict.subsyl_consonant.at(final_to_initial(j.final));
    return out;
}

Applied map_selected_units(const SegmentedText& seg, const std::vector<size_t>& eligible,
                           double tau, Rng& rng,
                           const std::function<std::string(const Unit&)>& render) {
    size_t m = rewrite_budget(tau, eligible.size());
    std::set<size_t> chosen;
    for (size_t pick : rng.sample_indices(eligible.size(), m)) chosen.insert(eligible[pick]);

    OutputBuilder out;
    for (size_t i = 0; i < seg.units.size(); ++i) {
        if (chosen.count(i)) {
            out.replace(detail::render_unit(seg.units[i]), render(seg.units[i]));
        } else {
            out.keep(seg.units[i]);
        }
    }
    return out.done();
}

}  // namespace

Applied lookalike(const std::string& text, LookalikeLevel level, LookalikeScript script,
                  double tau, Rng& rng, const GlyphDict& dict) {
    SegmentedText seg = segment(text);

    if (level == LookalikeLevel::Subsyllabic) {
        std::vector<size_t> eligible;
        for (size_t i = 0; i < seg.units.size(); ++i) {
            if (seg.units[i].is_syllable() && subsyl_renderable(seg.units[i].jamo, dict)) {
                eligible.push_back(i);
            }
        }
        if (eligible.empty()) throw NoEligibleTargetError("no subsyllabic-renderable syllable");
        return map_selected_units(seg, eligible, tau, rng,
                                  [&](const Unit& u) { return subsyl_render(u.jamo, dict); });
    }

    const auto& table =
        script == LookalikeScript::Hangeul ? dict.hangeul_lookalike : dict.cross_lookalike;
    std::vector<size_t> eligible;
    for (size_t i = 0; i < seg.units.size(); ++i) {
        if (seg.units[i].is_syllable() && table.count(detail::render_unit(seg.units[i]))) {
            eligible.push_back(i);
        }
    }
    if (eligible.empty()) throw NoEligibleTargetError("no lookalike entry matches");
    return map_selected_units(seg, eligible, tau, rng, [&](const Unit& u) {
        return rng.pick(table.at(detail::render_unit(u)));
    });
}

Applied cross_script(const std::string& text, double tau, Rng& rng, const GlyphDict& dict) {
    SegmentedText seg = segment(text);
    std::vector<size_t> eligible;
    for (size_t i = 0; i < seg.units.size(); ++i) {
        const Unit& u = seg.units[i];
        if (!u.is_syllable()) continue;
        if (dict.cross_lookalike.count(detail::render_unit(u)) || subsyl_renderable(u.jamo, dict)) {
            eligible.push_back(i);
        }
    }
    if (eligible.empty()) throw NoEligibleTargetError("no cross-script rendering available");
    return map_selected_units(seg, eligible, tau, rng, [&](const Unit& u) {
        auto it = dict.cross_lookalike.find(detail::render_unit(u));
        if (it != dict.cross_lookalike.end()) return rng.pick(it->second);
        return subsyl_render(u.jamo, dict);
    });
}

namespace {

struct RotSpan {
    size_t begin;
    size_t end;
    bool half;  // 180°: map then reverse; 90°: map in place
};

std::vector<RotSpan> scan_spans(const SegmentedText& seg, const std::map<std::string, std::string>& table,
                                bool half) {
    std::vector<RotSpan> out;
    size_t i = 0;
    while (i < seg.units.size()) {
        if (!seg.units[i].is_syllable() || !table.count(detail::render_unit(seg.units[i]))) {
            ++i;
            continue;
        }
        size_t begin = i;
        while (i < seg.units.size() && seg.units[i].is_syllable() &&
               table.count(detail::render_unit(seg.units[i]))) {
            ++i;
        }
        if (!half || i - begin >= 2) out.push_back({begin, i, half});
    }
    return out;
}

std::string render_rotated(const SegmentedText& seg, const RotSpan& span,
                           const GlyphDict& dict) {
    const auto& table = span.half ? dict.rot180 : dict.rot90;
    std::vector<std::string> parts;
    for (size_t i = span.begin; i < span.end; ++i) {
        parts.push_back(table.at(detail::render_unit(seg.units[i])));
    }
    if (span.half) std::reverse(parts.begin(), parts.end());
    std::string out;
    for (const auto& p : parts) out += p;
    return out;
}

}  // namespace

Applied rotate(const std::string& text, RotationAngle angle, double tau, Rng& rng,
               const GlyphDict& dict) {
    SegmentedText seg = segment(text);
    std::vector<RotSpan> spans;
    if (angle != RotationAngle::Quarter) {
        for (const auto& s : scan_spans(seg, dict.rot180, true)) spans.push_back(s);
    }
    if (angle != RotationAngle::Half) {
        for (const auto& s : scan_spans(seg, dict.rot90, false)) spans.push_back(s);
    }
    if (spans.empty()) throw NoEligibleTargetError("no rotatable span");
    std::sort(spans.begin(), spans.end(),
              [](const RotSpan& a, const RotSpan& b) { return a.begin < b.begin; });

    size_t m = rewrite_budget(tau, spans.size());
    std::set<size_t> touched;
    std::map<size_t, const RotSpan*> chosen;  // keyed by begin for ordered emission
    for (size_t pick : rng.sample_indices(spans.size(), m)) {
        const RotSpan& s = spans[pick];
        bool overlaps = false;
        for (size_t i = s.begin; i < s.end; ++i) overlaps |= touched.count(i) > 0;
        if (overlaps) continue;
        for (size_t i = s.begin; i < s.end; ++i) touched.insert(i);
        chosen[s.begin] = &s;
    }

    OutputBuilder out;
    for (size_t i = 0; i < seg.units.size();) {
        auto it = chosen.find(i);
        if (it != chosen.end()) {
            const RotSpan& s = *it->second;
            out.replace(detail::render_units(seg.units, s.begin, s.end),
                        render_rotated(seg, s, dict));
            i = s.end;
        } else {
            out.keep(seg.units[i]);
            ++i;
        }
    }
    return out.done();
}

}  // namespace koobf
