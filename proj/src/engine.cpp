#include "koobf/engine.hpp"

#include <algorithm>

#include "koobf/errors.hpp"
#include "koobf/hangul.hpp"
#include "koobf/rules/iconological.hpp"
#include "koobf/rules/phonological.hpp"
#include "koobf/rules/pragmatic.hpp"
#include "koobf/rules/syntactic.hpp"

namespace koobf {

const std::vector<RuleSpec>& default_rules() {
    static const std::vector<RuleSpec> rules = {
        {1, RuleCategory::Phonological, 0.5, "initial-replacement"},
        {2, RuleCategory::Phonological, 0.3, "medial-replacement"},
        {3, RuleCategory::Phonological, 0.5, "final-replacement"},
        {4, RuleCategory::Phonological, 0.5, "pronunciation-transcription"},
        {5, RuleCategory::Phonological, 0.3, "initial-insertion"},
        {6, RuleCategory::Phonological, 0.5, "medial-insertion"},
        {7, RuleCategory::Phonological, 0.5, "final-insertion"},
        {8, RuleCategory::Phonological, 0.3, "liaison"},
        {9, RuleCategory::Iconological, 0.3, "hangeul-lookalike"},
        {10, RuleCategory::Iconological, 0.5, "cross-script-lookalike"},
        {11, RuleCategory::Iconological, 0.3, "rotation"},
        {12, RuleCategory::Transliteration, 0.5, "latin-transliteration"},
        {13, RuleCategory::Transliteration, 0.3, "phonetic-cjk"},
        {14, RuleCategory::Transliteration, 0.5, "semantic-transliteration"},
        {15, RuleCategory::Syntactic, 0.5, "spacing-perturbation"},
        {16, RuleCategory::Syntactic, 0.3, "syllable-anagram"},
        {17, RuleCategory::Pragmatic, 0.5, "symbol-insertion"},
    };
    return rules;
}

const RuleSpec& rule_by_id(int id) {
    for (const auto& rule : default_rules()) {
        if (rule.id == id) return rule;
    }
    throw IndexOutOfRangeError("rule id out of range: " + std::to_string(id));
}

Applied apply_rule(const std::string& text, const RuleSpec& rule, double tau, Rng& rng,
                   const EngineContext& ctx) {
    double t = tau >= 0.0 ? tau : rule.tau;
    switch (rule.id) {
        case 1: return replace_jamo(text, JamoSlot::Initial, t, rng, ctx.dicts.phon);
        case 2: return replace_jamo(text, JamoSlot::Medial, t, rng, ctx.dicts.phon);
        case 3: return replace_jamo(text, JamoSlot::Final, t, rng, ctx.dicts.phon);
        case 4: return resyllabify(text, t, rng);
        case 5: return insert_jamo(text, JamoSlot::Initial, t, rng, ctx.dicts.phon);
        case 6: return insert_jamo(text, JamoSlot::Medial, t, rng, ctx.dicts.phon);
        case 7: return insert_jamo(text, JamoSlot::Final, t, rng, ctx.dicts.phon);
        case 8: return liaison(text, LiaisonDirection::Both, t, rng);
        case 9:
            return lookalike(text, LookalikeLevel::Character, LookalikeScript::Hangeul, t, rng,
                             ctx.dicts.glyph);
        case 10: return cross_script(text, t, rng, ctx.dicts.glyph);
        case 11: return rotate(text, RotationAngle::Any, t, rng, ctx.dicts.glyph);
        case 12:
            return transliterate(text, TranslitMode::Latin, t, rng, ctx.translit_backend,
                                 ctx.dicts.translit);
        case 13: return phonetic_cjk(text, t, rng, ctx.dicts.translit);
        case 14:
            return transliterate(text, TranslitMode::Semantic, t, rng, ctx.translit_backend,
                                 ctx.dicts.translit);
        case 15: return perturb_spacing(text, t, rng);
        case 16: return syllable_anagram(text, t, rng);
        case 17:
            return insert_symbols(text, t, rng,
                                  ctx.symbol_pool.empty() ? default_symbol_pool()
                                                          : ctx.symbol_pool);
        default: throw IndexOutOfRangeError("rule id out of range: " + std::to_string(rule.id));
    }
}

namespace {

bool has_hangul_or_letter(const std::string& text) {
    for (char32_t c : decode_utf8(text)) {
        if (is_syllable(c)) return true;
        if ((c >= U'가' && c <= U'힣') || (c >= 0x1100 && c <= 0x11FF) ||
            (c >= 0x3131 && c <= 0x3163)) {
            return true;
        }
        if ((c >= U'A' && c <= U'Z') || (c >= U'a' && c <= U'z')) return true;
        if (c >= 0x4E00 && c <= 0x9FFF) return true;  // CJK ideographs count as letters
    }
    return false;
}

}  // namespace

bool sanity_check(const std::string& x_n, const std::string& x_t, const std::string& y_n,
                  const std::string& y_t, const std::vector<int>& applied, int rule_id,
                  double max_length_ratio) {
    if (std::find(applied.begin(), applied.end(), rule_id) != applied.end()) return false;
    if (y_n == x_n || y_t == x_t) return false;
    if (y_n.empty() || y_t.empty()) return false;
    if (!has_hangul_or_letter(y_n) || !has_hangul_or_letter(y_t)) return false;
    size_t n_len = decode_utf8(y_n).size();
    size_t t_len = decode_utf8(y_t).size();
    if (n_len > max_length_ratio * decode_utf8(x_n).size()) return false;
    if (t_len > max_length_ratio * decode_utf8(x_t).size()) return false;
    return true;
}

ObfuscationResult obfuscate_pair(const std::string& neutral, const std::string& toxic, int k,
                                 const std::vector<RuleSpec>& rules, Rng& rng,
                                 const EngineContext& ctx) {
    ObfuscationResult result;
    result.neutral_obf = neutral;
    result.toxic_obf = toxic;
    result.level = k;

    for (int pass = 0; pass < k; ++pass) {
        std::vector<const RuleSpec*> candidates;
        for (const auto& rule : rules) {
            if (std::find(result.applied_rules.begin(), result.applied_rules.end(), rule.id) ==
                result.applied_rules.end()) {
                candidates.push_back(&rule);
            }
        }
        bool committed = false;
        while (!candidates.empty()) {
            size_t pick = rng.below(candidates.size());
            const RuleSpec& rule = *candidates[pick];
            bool ok = false;
            Applied on_neutral, on_toxic;
            try {
                on_neutral = apply_rule(result.neutral_obf, rule, -1.0, rng, ctx);
                on_toxic = apply_rule(result.toxic_obf, rule, -1.0, rng, ctx);
                ok = sanity_check(result.neutral_obf, result.toxic_obf, on_neutral.text,
                                  on_toxic.text, result.applied_rules, rule.id,
                                  ctx.max_length_ratio);
                // a later pass may not net-cancel earlier ones back onto the
                // source texts (e.g. reverse liaison undone by resyllabication)
                ok = ok && on_neutral.text != neutral && on_toxic.text != toxic;
            } catch (const NoEligibleTargetError&) {
                ok = false;
            } catch (const EmptyPoolError&) {
                ok = false;
            } catch (const MalformedRemoteResponseError&) {
                ok = false;
            }
            if (ok) {
                result.neutral_obf = on_neutral.text;
                result.toxic_obf = on_toxic.text;
                result.applied_rules.push_back(rule.id);
                result.traces.push_back({rule.id, on_neutral.edits, on_toxic.edits});
                committed = true;
                break;
            }
            candidates.erase(candidates.begin() + pick);
        }
        if (!committed) {
            throw IncompleteError("candidate set exhausted on pass " + std::to_string(pass + 1),
                                  static_cast<int>(result.applied_rules.size()));
        }
    }
    return result;
}

}  // namespace koobf
