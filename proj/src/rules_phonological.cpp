#include "koobf/rules/phonological.hpp"

#include <algorithm>
#include <set>

#include "koobf/errors.hpp"
#include "koobf/hangul.hpp"
#include "rule_common.hpp"

namespace koobf {

namespace {

using detail::OutputBuilder;

// jamo indices used by the rule logic
constexpr int kOnsetNieun = 2;    // ㄴ
constexpr int kOnsetMieum = 6;    // ㅁ
constexpr int kOnsetIeung = 11;   // ㅇ
constexpr int kOnsetHieut = 18;   // ㅎ
constexpr int kFinalRieul = 8;    // ㄹ
constexpr int kFinalIeung = 21;   // ㅇ

const std::map<int, std::vector<int>>& slot_map(const PhonDict& dict, JamoSlot slot, bool insert) {
    switch (slot) {
        case JamoSlot::Initial: return dict.initial_replace;
        case JamoSlot::Medial: return insert ? dict.medial_insert : dict.medial_replace;
        default: return dict.final_replace;
    }
}

int slot_value(const JamoTriple& j, JamoSlot slot) {
    switch (slot) {
        case JamoSlot::Initial: return j.initial;
        case JamoSlot::Medial: return j.medial;
        default: return j.final;
    }
}

void set_slot(JamoTriple& j, JamoSlot slot, int value) {
    switch (slot) {
        case JamoSlot::Initial: j.initial = value; break;
        case JamoSlot::Medial: j.medial = value; break;
        default: j.final = value; break;
    }
}

Applied rebuild_with_replacements(const SegmentedText& seg,
                                  const std::map<size_t, JamoTriple>& replacements) {
    OutputBuilder out;
    for (size_t i = 0; i < seg.units.size(); ++i) {
        auto it = replacements.find(i);
        if (it == replacements.end()) {
            out.keep(seg.units[i]);
        } else {
            out.replace(detail::render_unit(seg.units[i]), encode_utf8(compose(it->second)));
        }
    }
    return out.done();
}

}  // namespace

Applied replace_jamo(const std::string& text, JamoSlot slot, double tau, Rng& rng,
                     const PhonDict& dict) {
    SegmentedText seg = segment(text);
    const auto& table = slot_map(dict, slot, /*insert=*/false);

    std::vector<size_t> eligible;
    for (size_t i = 0; i < seg.units.size(); ++i) {
        const Unit& u = seg.units[i];
        if (!u.is_syllable()) continue;
        int v = slot_value(u.jamo, slot);
        if (slot == JamoSlot::Final && v == 0) continue;
        if (table.count(v)) eligible.push_back(i);
    }
    if (eligible.empty()) throw NoEligibleTargetError("no syllable qualifies for jamo replacement");

    size_t m = rewrite_budget(tau, eligible.size());
    std::map<size_t, JamoTriple> replacements;
    for (size_t pick : rng.sample_indices(eligible.size(), m)) {
        size_t idx = eligible[pick];
        JamoTriple j = seg.units[idx].jamo;
        set_slot(j, slot, rng.pick(table.at(slot_value(j, slot))));
        replacements[idx] = j;
    }
    return rebuild_with_replacements(seg, replacements);
}

Applied insert_jamo(const std::string& text, JamoSlot slot, double tau, Rng& rng,
                    const PhonDict& dict) {
    SegmentedText seg = segment(text);
    std::vector<size_t> eligible;

    if (slot == JamoSlot::Initial) {
        // onset ㅇ takes the previous coda forward (안에->안네) or an injected ㅎ
        for (size_t i = 0; i < seg.units.size(); ++i) {
            if (seg.units[i].is_syllable() && seg.units[i].jamo.initial == kOnsetIeung) {
                eligible.push_back(i);
            }
        }
    } else if (slot == JamoSlot::Medial) {
        for (size_t i = 0; i < seg.units.size(); ++i) {
            if (seg.units[i].is_syllable() && dict.medial_insert.count(seg.units[i].jamo.medial)) {
                eligible.push_back(i);
            }
        }
    } else {
        // empty coda borrows the following onset (호스트->홋스트)
        for (size_t i = 0; i + 1 < seg.units.size(); ++i) {
            const Unit& u = seg.units[i];
            const Unit& next = seg.units[i + 1];
            if (!u.is_syllable() || u.jamo.final != 0 || !next.is_syllable()) continue;
            int onset = next.jamo.initial;
            if (onset == kOnsetIeung || initial_to_final(onset) < 0) continue;
            eligible.push_back(i);
        }
    }
    if (eligible.empty()) throw NoEligibleTargetError("no syllable qualifies for jamo insertion");

    size_t m = rewrite_budget(tau, eligible.size());
    std::map<size_t, JamoTriple> replacements;
    for (size_t pick : rng.sample_indices(eligible.size(), m)) {
        size_t idx = eligible[pick];
        JamoTriple j = seg.units[idx].jamo;
        if (slot == JamoSlot::Initial) {
            int onset = kOnsetHieut;
            if (idx > 0 && seg.units[idx - 1].is_syllable() && seg.units[idx - 1].jamo.final != 0) {
                int keep, move;
                int prev_final = seg.units[idx - 1].jamo.final;
                if (split_cluster_final(prev_final, keep, move)) {
                    onset = move;
                } else if (int init = final_to_initial(prev_final); init >= 0) {
                    onset = init;
                }
            }
            j.initial = onset;
        } else if (slot == JamoSlot::Medial) {
            j.medial = rng.pick(dict.medial_insert.at(j.medial));
        } else {
            j.final = initial_to_final(seg.units[idx + 1].jamo.initial);
        }
        replacements[idx] = j;
    }
    return rebuild_with_replacements(seg, replacements);
}

namespace {

struct LiaisonSite {
    size_t index;  // left syllable
    bool forward;
};

bool forward_site(const Unit& a, const Unit& b) {
    if (!a.is_syllable() || !b.is_syllable()) return false;
    if (a.jamo.final == 0 || a.jamo.final == kFinalIeung) return false;
    if (b.jamo.initial != kOnsetIeung) return false;
    int keep, move;
    if (!split_cluster_final(a.jamo.final, keep, move) && final_to_initial(a.jamo.final) < 0) {
        return false;
    }
    return true;
}

bool reverse_site(const Unit& a, const Unit& b) {
    if (!a.is_syllable() || !b.is_syllable()) return false;
    if (a.jamo.final != 0) return false;
    int onset = b.jamo.initial;
    return onset != kOnsetIeung && initial_to_final(onset) >= 0;
}

// Applies one site to the unit pair. Forward moves the (cluster-last) coda
// onto the ㅇ onset, dropping a silent ㅎ instead of moving it.
void apply_liaison(Unit& a, Unit& b, bool forward) {
    JamoTriple ja = a.jamo;
    JamoTriple jb = b.jamo;
    if (forward) {
        int keep = 0, move;
        if (!split_cluster_final(ja.final, keep, move)) {
            move = final_to_initial(ja.final);
            keep = 0;
        }
        if (move == kOnsetHieut) {
            ja.final = 0;
            if (keep != 0) jb.initial = final_to_initial(keep);
        } else {
            ja.final = keep;
            jb.initial = move;
        }
    } else {
        ja.final = initial_to_final(jb.initial);
        jb.initial = kOnsetIeung;
    }
    a = make_syllable_unit(ja);
    b = make_syllable_unit(jb);
}

}  // namespace

Applied liaison(const std::string& text, LiaisonDirection direction, double tau, Rng& rng) {
    SegmentedText seg = segment(text);
    std::vector<LiaisonSite> sites;
    for (size_t i = 0; i + 1 < seg.units.size(); ++i) {
        const Unit& a = seg.units[i];
        const Unit& b = seg.units[i + 1];
        if (direction != LiaisonDirection::Reverse && forward_site(a, b)) {
            sites.push_back({i, true});
        } else if (direction != LiaisonDirection::Forward && reverse_site(a, b)) {
            sites.push_back({i, false});
        }
    }
    if (sites.empty()) throw NoEligibleTargetError("no liaison site");

    size_t m = rewrite_budget(tau, sites.size());
    std::vector<Unit> units = seg.units;
    std::set<size_t> touched;
    std::vector<std::pair<size_t, size_t>> spans;  // modified [i, i+2) ranges
    for (size_t pick : rng.sample_indices(sites.size(), m)) {
        const LiaisonSite& s = sites[pick];
        if (touched.count(s.index) || touched.count(s.index + 1)) continue;
        apply_liaison(units[s.index], units[s.index + 1], s.forward);
        touched.insert(s.index);
        touched.insert(s.index + 1);
        spans.emplace_back(s.index, s.index + 2);
    }
    std::sort(spans.begin(), spans.end());

    OutputBuilder out;
    size_t next_span = 0;
    for (size_t i = 0; i < seg.units.size();) {
        if (next_span < spans.size() && spans[next_span].first == i) {
            size_t end = spans[next_span].second;
            out.replace(detail::render_units(seg.units, i, end),
                        detail::render_units(units, i, end));
            i = end;
            ++next_span;
        } else {
            out.keep(seg.units[i]);
            ++i;
        }
    }
    return out.done();
}

namespace {

// ---- bundled pronunciation rule table (rule 4) ----

bool in_k_group(int f) { return f == 1 || f == 2 || f == 24 || f == 3 || f == 9; }   // ㄱㄲㅋㄳㄺ
bool in_t_group(int f) { return f == 7 || f == 19 || f == 20 || f == 22 || f == 23 || f == 25; }  // ㄷㅅㅆㅈㅊㅌ
bool in_p_group(int f) { return f == 17 || f == 26 || f == 14 || f == 18 || f == 11; }  // ㅂㅍㄿㅄㄼ

int tense_onset(int onset) {
    switch (onset) {
        case 0: return 1;    // ㄱ -> ㄲ
        case 3: return 4;    // ㄷ -> ㄸ
        case 7: return 8;    // ㅂ -> ㅃ
        case 9: return 10;   // ㅅ -> ㅆ
        case 12: return 13;  // ㅈ -> ㅉ
        default: return -1;
    }
}

bool nasal_onset(int onset) { return onset == kOnsetNieun || onset == kOnsetMieum; }

// passes run over one phrase's units; spaces may be deleted (site B)
void g2p_phrase(std::vector<Unit>& u) {
    // 1. forward liaison chains
    for (size_t i = 0; i + 1 < u.size(); ++i) {
        if (forward_site(u[i], u[i + 1])) apply_liaison(u[i], u[i + 1], true);
    }
    // 2. tensification after obstruent codas; after ㄹ it reaches across one
    //    space and absorbs it (할 짓 -> 할찌...)
    for (size_t i = 0; i < u.size(); ++i) {
        if (!u[i].is_syllable()) continue;
        int f = u[i].jamo.final;
        if (i + 1 < u.size() && u[i + 1].is_syllable() &&
            (in_k_group(f) || in_t_group(f) || in_p_group(f))) {
            int t = tense_onset(u[i + 1].jamo.initial);
            if (t >= 0) {
                JamoTriple j = u[i + 1].jamo;
                j.initial = t;
                u[i + 1] = make_syllable_unit(j);
            }
        }
        if (f == kFinalRieul && i + 2 < u.size() && u[i + 1].is_space() && u[i + 2].is_syllable()) {
            int t = tense_onset(u[i + 2].jamo.initial);
            if (t >= 0) {
                JamoTriple j = u[i + 2].jamo;
                j.initial = t;
                u[i + 2] = make_syllable_unit(j);
                u.erase(u.begin() + i + 1);
            }
        }
    }
    // 3. nasal assimilation
    for (size_t i = 0; i + 1 < u.size(); ++i) {
        if (!u[i].is_syllable() || !u[i + 1].is_syllable()) continue;
        if (!nasal_onset(u[i + 1].jamo.initial)) continue;
        JamoTriple j = u[i].jamo;
        if (in_k_group(j.final)) {
            j.final = kFinalIeung;
        } else if (in_p_group(j.final)) {
            j.final = 16;  // ㅁ
        } else if (in_t_group(j.final)) {
            j.final = 4;  // ㄴ
        } else {
            continue;
        }
        u[i] = make_syllable_unit(j);
    }
}

bool phrase_has_site(const std::vector<Unit>& u) {
    for (size_t i = 0; i + 1 < u.size(); ++i) {
        if (forward_site(u[i], u[i + 1])) return true;
        if (!u[i].is_syllable()) continue;
        int f = u[i].jamo.final;
        if (u[i + 1].is_syllable() && (in_k_group(f) || in_t_group(f) || in_p_group(f))) {
            if (tense_onset(u[i + 1].jamo.initial) >= 0) return true;
            if (nasal_onset(u[i + 1].jamo.initial)) return true;
        }
        if (f == kFinalRieul && i + 2 < u.size() && u[i + 1].is_space() && u[i + 2].is_syllable() &&
            tense_onset(u[i + 2].jamo.initial) >= 0) {
            return true;
        }
    }
    return false;
}

// maximal run of syllables joined by single spaces
std::vector<std::pair<size_t, size_t>> phrase_ranges(const SegmentedText& seg) {
    std::vector<std::pair<size_t, size_t>> out;
    const auto& u = seg.units;
    size_t i = 0;
    while (i < u.size()) {
        if (!u[i].is_syllable()) {
            ++i;
            continue;
        }
        size_t begin = i;
        size_t end = i + 1;
        while (end < u.size()) {
            if (u[end].is_syllable()) {
                ++end;
            } else if (u[end].is_space() && end + 1 < u.size() && u[end + 1].is_syllable()) {
                end += 2;
            } else {
                break;
            }
        }
        out.emplace_back(begin, end);
        i = end;
    }
    return out;
}

}  // namespace

Applied resyllabify(const std::string& text, double tau, Rng& rng) {
    SegmentedText seg = segment(text);
    auto phrases = phrase_ranges(seg);

    std::vector<size_t> eligible;
    for (size_t p = 0; p < phrases.size(); ++p) {
        std::vector<Unit> slice(seg.units.begin() + phrases[p].first,
                                seg.units.begin() + phrases[p].second);
        if (phrase_has_site(slice)) eligible.push_back(p);
    }
    if (eligible.empty()) throw NoEligibleTargetError("no pronunciation rule site");

    size_t m = rewrite_budget(tau, eligible.size());
    std::set<size_t> chosen;
    for (size_t pick : rng.sample_indices(eligible.size(), m)) chosen.insert(eligible[pick]);

    OutputBuilder out;
    size_t next = 0;
    for (size_t i = 0; i < seg.units.size();) {
        if (next < phrases.size() && phrases[next].first == i) {
            auto [begin, end] = phrases[next];
            if (chosen.count(next)) {
                std::vector<Unit> slice(seg.units.begin() + begin, seg.units.begin() + end);
                g2p_phrase(slice);
                out.replace(detail::render_units(seg.units, begin, end),
                            detail::render_units(slice, 0, slice.size()));
            } else {
                out.keep(detail::render_units(seg.units, begin, end));
            }
            i = end;
            ++next;
        } else {
            out.keep(seg.units[i]);
            ++i;
        }
    }
    return out.done();
}

}  // namespace koobf
