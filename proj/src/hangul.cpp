#include "koobf/hangul.hpp"

#include <array>
#include <stdexcept>

#include "koobf/errors.hpp"

namespace koobf {

namespace {

// Compatibility jamo (U+3131..U+3163) in canonical slot order.
constexpr std::array<char32_t, kInitialCount> kInitialCompat = {
    U'ㄱ', U'ㄲ', U'ㄴ', U'ㄷ', U'ㄸ', U'ㄹ', U'ㅁ', U'ㅂ', U'ㅃ', U'ㅅ',
    U'ㅆ', U'ㅇ', U'ㅈ', U'ㅉ', U'ㅊ', U'ㅋ', U'ㅌ', U'ㅍ', U'ㅎ'};

constexpr std::array<char32_t, kMedialCount> kMedialCompat = {
    U'ㅏ', U'ㅐ', U'ㅑ', U'ㅒ', U'ㅓ', U'ㅔ', U'ㅕ', U'ㅖ', U'ㅗ', U'ㅘ', U'ㅙ',
    U'ㅚ', U'ㅛ', U'ㅜ', U'ㅝ', U'ㅞ', U'ㅟ', U'ㅠ', U'ㅡ', U'ㅢ', U'ㅣ'};

constexpr std::array<char32_t, kFinalCount> kFinalCompat = {
    0,      U'ㄱ', U'ㄲ', U'ㄳ', U'ㄴ', U'ㄵ', U'ㄶ', U'ㄷ', U'ㄹ', U'ㄺ',
    U'ㄻ', U'ㄼ', U'ㄽ', U'ㄾ', U'ㄿ', U'ㅀ', U'ㅁ', U'ㅂ', U'ㅄ', U'ㅅ',
    U'ㅆ', U'ㅇ', U'ㅈ', U'ㅊ', U'ㅋ', U'ㅌ', U'ㅍ', U'ㅎ'};

// final index -> initial index of the same consonant; -1 for clusters/none.
constexpr std::array<int, kFinalCount> kFinalToInitial = {
    -1, 0, 1, -1, 2, -1, -1, 3, 5, -1, -1, -1, -1, -1,
    -1, -1, 6, 7, -1, 9, 10, 11, 12, 14, 15, 16, 17, 18};

// initial index -> final index; -1 where the consonant cannot be a coda.
constexpr std::array<int, kInitialCount> kInitialToFinal = {
    1, 2, 4, 7, -1, 8, 16, 17, -1, 19, 20, 21, 22, -1, 23, 24, 25, 26, 27};

struct ClusterSplit {
    int final_idx;
    int keep_final;
    int move_initial;
};

// coda clusters (ㄳ ㄵ ㄶ ㄺ ㄻ ㄼ ㄽ ㄾ ㄿ ㅀ ㅄ) split into kept coda + movable onset
constexpr std::array<ClusterSplit, 11> kClusterSplits = {{
    {3, 1, 9},    // ㄳ -> ㄱ + ㅅ
    {5, 4, 12},   // ㄵ -> ㄴ + ㅈ
    {6, 4, 18},   // ㄶ -> ㄴ + ㅎ
    {9, 8, 0},    // ㄺ -> ㄹ + ㄱ
    {10, 8, 6},   // ㄻ -> ㄹ + ㅁ
    {11, 8, 7},   // ㄼ -> ㄹ + ㅂ
    {12, 8, 9},   // ㄽ -> ㄹ + ㅅ
    {13, 8, 16},  // ㄾ -> ㄹ + ㅌ
    {14, 8, 17},  // ㄿ -> ㄹ + ㅍ
    {15, 8, 18},  // ㅀ -> ㄹ + ㅎ
    {18, 17, 9},  // ㅄ -> ㅂ + ㅅ
}};

}  // namespace

bool is_syllable(char32_t c) {
    return c >= kSyllableBase && c < kSyllableBase + kSyllableCount;
}

JamoTriple decompose(char32_t c) {
    if (!is_syllable(c)) {
        throw NotHangulSyllableError("not a precomposed Hangul syllable: U+" +
                                     std::to_string(static_cast<uint32_t>(c)));
    }
    int idx = static_cast<int>(c - kSyllableBase);
    return JamoTriple{idx / (kMedialCount * kFinalCount),
                      (idx / kFinalCount) % kMedialCount,
                      idx % kFinalCount};
}

char32_t compose(const JamoTriple& j) {
    if (j.initial < 0 || j.initial >= kInitialCount || j.medial < 0 ||
        j.medial >= kMedialCount || j.final < 0 || j.final >= kFinalCount) {
        throw IndexOutOfRangeError("jamo index out of range");
    }
    return kSyllableBase +
           static_cast<char32_t>((j.initial * kMedialCount + j.medial) * kFinalCount + j.final);
}

char32_t initial_to_compat(int idx) {
    if (idx < 0 || idx >= kInitialCount) throw IndexOutOfRangeError("initial index");
    return kInitialCompat[idx];
}

char32_t medial_to_compat(int idx) {
    if (idx < 0 || idx >= kMedialCount) throw IndexOutOfRangeError("medial index");
    return kMedialCompat[idx];
}

char32_t final_to_compat(int idx) {
    if (idx < 0 || idx >= kFinalCount) throw IndexOutOfRangeError("final index");
    return kFinalCompat[idx];
}

int final_to_initial(int final_idx) {
    if (final_idx < 0 || final_idx >= kFinalCount) throw IndexOutOfRangeError("final index");
    return kFinalToInitial[final_idx];
}

int initial_to_final(int initial_idx) {
    if (initial_idx < 0 || initial_idx >= kInitialCount) throw IndexOutOfRangeError("initial index");
    return kInitialToFinal[initial_idx];
}

bool split_cluster_final(int final_idx, int& keep_final, int& move_initial) {
    for (const auto& c : kClusterSplits) {
        if (c.final_idx == final_idx) {
            keep_final = c.keep_final;
            move_initial = c.move_initial;
            return true;
        }
    }
    return false;
}

Unit make_syllable_unit(const JamoTriple& j) {
    Unit u;
    u.kind = UnitKind::Syllable;
    u.jamo = j;
    u.scalar = compose(j);
    return u;
}

std::string SegmentedText::render() const {
    std::u32string out;
    out.reserve(units.size());
    for (const Unit& u : units) out.push_back(u.scalar);
    return encode_utf8(out);
}

size_t SegmentedText::syllable_count() const {
    size_t n = 0;
    for (const Unit& u : units) n += u.is_syllable();
    return n;
}

SegmentedText segment(const std::string& text) {
    SegmentedText seg;
    std::u32string scalars = decode_utf8(text);
    seg.units.reserve(scalars.size());
    for (char32_t c : scalars) {
        Unit u;
        u.scalar = c;
        if (is_syllable(c)) {
            u.kind = UnitKind::Syllable;
            u.jamo = decompose(c);
        } else if (c == U' ') {
            u.kind = UnitKind::Space;
        } else {
            u.kind = UnitKind::Other;
        }
        seg.units.push_back(u);
    }
    return seg;
}

namespace {

bool is_choseong(char32_t c) { return c >= 0x1100 && c <= 0x1112; }
bool is_jungseong(char32_t c) { return c >= 0x1161 && c <= 0x1175; }
bool is_jongseong(char32_t c) { return c >= 0x11A8 && c <= 0x11C2; }

}  // namespace

std::string normalize_hangul(const std::string& text) {
    std::u32string in = decode_utf8(text);
    std::u32string out;
    out.reserve(in.size());
    for (size_t i = 0; i < in.size(); ++i) {
        char32_t c = in[i];
        if (is_choseong(c) && i + 1 < in.size() && is_jungseong(in[i + 1])) {
            JamoTriple j;
            j.initial = static_cast<int>(c - 0x1100);
            j.medial = static_cast<int>(in[i + 1] - 0x1161);
            ++i;
            if (i + 1 < in.size() && is_jongseong(in[i + 1])) {
                j.final = static_cast<int>(in[i + 1] - 0x11A7);
                ++i;
            }
            out.push_back(compose(j));
            continue;
        }
        // LV block followed by a conjoining trailing jamo
        if (is_syllable(c) && (c - kSyllableBase) % kFinalCount == 0 && i + 1 < in.size() &&
            is_jongseong(in[i + 1])) {
            out.push_back(c + (in[i + 1] - 0x11A7));
            ++i;
            continue;
        }
        out.push_back(c);
    }
    return encode_utf8(out);
}

std::u32string decode_utf8(const std::string& s) {
    std::u32string out;
    out.reserve(s.size());
    size_t i = 0;
    const auto* b = reinterpret_cast<const unsigned char*>(s.data());
    while (i < s.size()) {
        unsigned char c = b[i];
        char32_t cp;
        size_t len;
        if (c < 0x80) {
            cp = c;
            len = 1;
        } else if ((c & 0xE0) == 0xC0) {
            cp = c & 0x1F;
            len = 2;
        } else if ((c & 0xF0) == 0xE0) {
            cp = c & 0x0F;
            len = 3;
        } else if ((c & 0xF8) == 0xF0) {
            cp = c & 0x07;
            len = 4;
        } else {
            throw std::invalid_argument("malformed utf-8 at byte " + std::to_string(i));
        }
        if (i + len > s.size()) throw std::invalid_argument("truncated utf-8 sequence");
        for (size_t k = 1; k < len; ++k) {
            if ((b[i + k] & 0xC0) != 0x80) throw std::invalid_argument("malformed utf-8 continuation");
            cp = (cp << 6) | (b[i + k] & 0x3F);
        }
        static constexpr char32_t kMinByLen[5] = {0, 0, 0x80, 0x800, 0x10000};
        if (cp < kMinByLen[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
            throw std::invalid_argument("invalid utf-8 scalar");
        }
        out.push_back(cp);
        i += len;
    }
    return out;
}

std::string encode_utf8(const std::u32string& s) {
    std::string out;
    out.reserve(s.size() * 3);
    for (char32_t c : s) out += encode_utf8(c);
    return out;
}

std::string encode_utf8(char32_t c) {
    std::string out;
    if (c < 0x80) {
        out += static_cast<char>(c);
    } else if (c < 0x800) {
        out += static_cast<char>(0xC0 | (c >> 6));
        out += static_cast<char>(0x80 | (c & 0x3F));
    } else if (c < 0x10000) {
        out += static_cast<char>(0xE0 | (c >> 12));
        out += static_cast<char>(0x80 | ((c >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (c & 0x3F));
    } else {
        out += static_cast<char>(0xF0 | (c >> 18));
        out += static_cast<char>(0x80 | ((c >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((c >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (c & 0x3F));
    }
    return out;
}

}  // namespace koobf
