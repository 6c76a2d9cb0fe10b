#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace koobf {

// Precomposed syllable block arithmetic: 0xAC00 + (initial*21 + medial)*28 + final.
inline constexpr char32_t kSyllableBase = 0xAC00;
inline constexpr int kInitialCount = 19;
inline constexpr int kMedialCount = 21;
inline constexpr int kFinalCount = 28;  // index 0 = no final
inline constexpr int kSyllableCount = kInitialCount * kMedialCount * kFinalCount;  // 11172

struct JamoTriple {
    int initial = 0;  // 0..18
    int medial = 0;   // 0..20
    int final = 0;    // 0..27, 0 means none

    bool operator==(const JamoTriple&) const = default;
};

bool is_syllable(char32_t c);

// Errors: NotHangulSyllableError / IndexOutOfRangeError.
JamoTriple decompose(char32_t c);
char32_t compose(const JamoTriple& j);

// Compatibility jamo (U+3131..) for rendering bare jamo; 0 for the empty final.
char32_t initial_to_compat(int idx);
char32_t medial_to_compat(int idx);
char32_t final_to_compat(int idx);

// Slot correspondences between onset and coda inventories; -1 when a consonant
// has no counterpart in the other slot (e.g. ㄸ as a final).
int final_to_initial(int final_idx);
int initial_to_final(int initial_idx);

// Cluster codas split into (kept final index, movable initial index); returns
// false for simple finals.
bool split_cluster_final(int final_idx, int& keep_final, int& move_initial);

enum class UnitKind { Syllable, Space, Other };

struct Unit {
    UnitKind kind = UnitKind::Other;
    char32_t scalar = 0;  // always the code point this unit renders to
    JamoTriple jamo;      // meaningful only for Syllable units

    bool is_syllable() const { return kind == UnitKind::Syllable; }
    bool is_space() const { return kind == UnitKind::Space; }
};

Unit make_syllable_unit(const JamoTriple& j);

// Lossless unit view of a string: every scalar becomes exactly one unit and
// render() reproduces the input byte for byte.
struct SegmentedText {
    std::vector<Unit> units;

    std::string render() const;
    size_t syllable_count() const;
};

SegmentedText segment(const std::string& text);

// Hangul-only canonical composition used on corpus ingestion: conjoining jamo
// sequences (U+1100 L + U+1161 V [+ U+11A8 T], or LV block + T) are recomposed
// into precomposed blocks where one exists. Not a full Unicode normalizer.
std::string normalize_hangul(const std::string& text);

// utf-8 <-> scalar helpers (strict; throws std::invalid_argument on bad input)
std::u32string decode_utf8(const std::string& s);
std::string encode_utf8(const std::u32string& s);
std::string encode_utf8(char32_t c);

}  // namespace koobf
