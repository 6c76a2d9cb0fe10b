#pragma once

#include <map>
#include <string>
#include <vector>

namespace koobf {

// Substitution dictionaries for the phonological rules, keyed by jamo index
// for the slot they apply to. Targets are ordered; a draw picks uniformly.
struct PhonDict {
    std::map<int, std::vector<int>> initial_replace;  // lenis -> tense/aspirated
    std::map<int, std::vector<int>> medial_replace;   // vowel -> diphthong
    std::map<int, std::vector<int>> final_replace;    // coda -> homophone/cluster
    std::map<int, std::vector<int>> medial_insert;    // vowel -> glide-extended vowel
};

// Glyph-level maps for the iconological rules. Keys are precomposed syllables
// rendered as utf-8; values may be multi-scalar strings.
struct GlyphDict {
    std::map<std::string, std::vector<std::string>> hangeul_lookalike;  // rule 9
    std::map<std::string, std::vector<std::string>> cross_lookalike;    // rule 10, char level
    std::map<int, std::string> subsyl_consonant;  // initial/final index -> symbol
    std::map<int, std::string> subsyl_vowel;      // medial index -> symbol (sparse)
    std::map<std::string, std::string> rot90;
    std::map<std::string, std::string> rot180;  // symmetric by construction
};

struct TranslitDict {
    std::map<std::string, std::string> cjk_phonetic;    // rule 13, injective
    std::map<std::string, std::string> semantic_phrase; // rule 14 offline fallback
};

const PhonDict& default_phon_dict();
const GlyphDict& default_glyph_dict();
const TranslitDict& default_translit_dict();

struct DictSet {
    PhonDict phon;
    GlyphDict glyph;
    TranslitDict translit;
};

DictSet default_dicts();

// Plain-text dictionary format: one mapping per line, source<TAB>target<TAB>table.
// Table names: replace-initial, replace-medial, replace-final, insert-medial,
// lookalike-hangeul, lookalike-cross, subsyl-consonant, subsyl-vowel, rot90,
// rot180, cjk-phonetic, semantic-phrase. Lines starting with '#' are comments.
// Entries merge over `base` (targets append; scalar tables overwrite).
// Errors: ParseError with the offending line number.
void merge_dictionary_file(DictSet& base, const std::string& path);

}  // namespace koobf
