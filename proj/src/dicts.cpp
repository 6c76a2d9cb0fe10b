#include "koobf/dicts.hpp"

#include <fstream>
#include <sstream>

#include "koobf/errors.hpp"
#include "koobf/hangul.hpp"

namespace koobf {

namespace {

int initial_index(char32_t compat) {
    for (int i = 0; i < kInitialCount; ++i) {
        if (initial_to_compat(i) == compat) return i;
    }
    throw IndexOutOfRangeError("not an initial consonant");
}

int medial_index(char32_t compat) {
    for (int i = 0; i < kMedialCount; ++i) {
        if (medial_to_compat(i) == compat) return i;
    }
    throw IndexOutOfRangeError("not a medial vowel");
}

int final_index(char32_t compat) {
    for (int i = 1; i < kFinalCount; ++i) {
        if (final_to_compat(i) == compat) return i;
    }
    throw IndexOutOfRangeError("not a final consonant");
}

void add(std::map<int, std::vector<int>>& m, int key, int value) {
    m[key].push_back(value);
}

PhonDict build_phon_dict() {
    PhonDict d;
    // lenis -> tense onsets
    add(d.initial_replace, initial_index(U'ㄱ'), initial_index(U'ㄲ'));
    add(d.initial_replace, initial_index(U'ㄷ'), initial_index(U'ㄸ'));
    add(d.initial_replace, initial_index(U'ㅂ'), initial_index(U'ㅃ'));
    add(d.initial_replace, initial_index(U'ㅅ'), initial_index(U'ㅆ'));
    add(d.initial_replace, initial_index(U'ㅈ'), initial_index(U'ㅉ'));
    // lenis -> aspirated onsets
    add(d.initial_replace, initial_index(U'ㄱ'), initial_index(U'ㅋ'));
    add(d.initial_replace, initial_index(U'ㄷ'), initial_index(U'ㅌ'));
    add(d.initial_replace, initial_index(U'ㅂ'), initial_index(U'ㅍ'));
    add(d.initial_replace, initial_index(U'ㅈ'), initial_index(U'ㅊ'));
    add(d.initial_replace, initial_index(U'ㅊ'), initial_index(U'ㅋ'));

    // vowel -> diphthong
    add(d.medial_replace, medial_index(U'ㅏ'), medial_index(U'ㅑ'));
    add(d.medial_replace, medial_index(U'ㅓ'), medial_index(U'ㅕ'));
    add(d.medial_replace, medial_index(U'ㅗ'), medial_index(U'ㅛ'));
    add(d.medial_replace, medial_index(U'ㅜ'), medial_index(U'ㅠ'));
    add(d.medial_replace, medial_index(U'ㅡ'), medial_index(U'ㅢ'));
    add(d.medial_replace, medial_index(U'ㅐ'), medial_index(U'ㅒ'));
    add(d.medial_replace, medial_index(U'ㅔ'), medial_index(U'ㅖ'));

    // codas within one neutralized pronunciation group, plus silent cluster
    // extensions (돈->돉, 았->앆 style)
    add(d.final_replace, final_index(U'ㄱ'), final_index(U'ㄲ'));
    add(d.final_replace, final_index(U'ㄱ'), final_index(U'ㅋ'));
    add(d.final_replace, final_index(U'ㄷ'), final_index(U'ㅌ'));
    add(d.final_replace, final_index(U'ㄷ'), final_index(U'ㅅ'));
    add(d.final_replace, final_index(U'ㅂ'), final_index(U'ㅍ'));
    add(d.final_replace, final_index(U'ㅅ'), final_index(U'ㅆ'));
    add(d.final_replace, final_index(U'ㅅ'), final_index(U'ㅈ'));
    add(d.final_replace, final_index(U'ㅅ'), final_index(U'ㅊ'));
    add(d.final_replace, final_index(U'ㅆ'), final_index(U'ㄲ'));
    add(d.final_replace, final_index(U'ㅈ'), final_index(U'ㅊ'));
    add(d.final_replace, final_index(U'ㄴ'), final_index(U'ㄵ'));
    add(d.final_replace, final_index(U'ㄴ'), final_index(U'ㄶ'));
    add(d.final_replace, final_index(U'ㄹ'), final_index(U'ㅀ'));
    add(d.final_replace, final_index(U'ㄹ'), final_index(U'ㄼ'));

    // vowel -> glide-extended vowel (궈퓸 졈슈줘숴 style insertions)
    add(d.medial_insert, medial_index(U'ㅏ'), medial_index(U'ㅘ'));
    add(d.medial_insert, medial_index(U'ㅏ'), medial_index(U'ㅑ'));
    add(d.medial_insert, medial_index(U'ㅓ'), medial_index(U'ㅝ'));
    add(d.medial_insert, medial_index(U'ㅓ'), medial_index(U'ㅕ'));
    add(d.medial_insert, medial_index(U'ㅗ'), medial_index(U'ㅛ'));
    add(d.medial_insert, medial_index(U'ㅜ'), medial_index(U'ㅠ'));
    add(d.medial_insert, medial_index(U'ㅜ'), medial_index(U'ㅟ'));
    add(d.medial_insert, medial_index(U'ㅣ'), medial_index(U'ㅟ'));
    add(d.medial_insert, medial_index(U'ㅔ'), medial_index(U'ㅖ'));
    add(d.medial_insert, medial_index(U'ㅐ'), medial_index(U'ㅒ'));
    return d;
}

GlyphDict build_glyph_dict() {
    GlyphDict d;
    auto look = [&d](const char* from, const char* to) { d.hangeul_lookalike[from].push_back(to); };
    look("귀", "커");
    look("멍", "댕");
    look("비", "네");
    look("면", "띤");
    look("명", "띵");
    look("유", "윾");
    look("우", "윽");
    look("점", "겸");
    look("과", "파");
    look("괄", "팔");
    look("관", "판");
    look("대", "머");
    look("왕", "앟");
    look("공", "끙");

    auto cross = [&d](const char* from, const char* to) { d.cross_lookalike[from].push_back(to); };
    cross("틎", "長");
    cross("국", "弓");
    cross("흡", "音");
    cross("쭈", "卒");
    cross("쇼", "企");
    cross("슥", "今");
    cross("유", "引");
    cross("튼", "長");
    cross("숲", "金");
    cross("흠", "高");
    cross("매", "叫");
    cross("조", "丕");
    cross("몸", "呂");
    cross("야", "OF");
    cross("태", "EH");
    cross("참", "え占");
    cross("바", "㉳");

    auto subc = [&d](char32_t jamo, const char* sym) {
        for (int i = 0; i < kInitialCount; ++i) {
            if (initial_to_compat(i) == jamo) d.subsyl_consonant[i] = sym;
        }
    };
    subc(U'ㄱ', "プ");
    subc(U'ㄴ', "レ");
    subc(U'ㄷ', "て");
    subc(U'ㄹ', "己");
    subc(U'ㅁ', "口");
    subc(U'ㅂ', "せ");
    subc(U'ㅅ', "人");
    subc(U'ㅇ', "○");
    subc(U'ㅈ', "久");
    subc(U'ㅊ', "大");
    subc(U'ㅋ', "ヲ");
    subc(U'ㅌ', "巨");
    subc(U'ㅍ', "立");
    subc(U'ㅎ', "云");

    auto subv = [&d](char32_t jamo, const char* sym) {
        for (int i = 0; i < kMedialCount; ++i) {
            if (medial_to_compat(i) == jamo) d.subsyl_vowel[i] = sym;
        }
    };
    subv(U'ㅏ', "r");
    subv(U'ㅐ', "Й");

    d.rot90["비"] = "뜨";
    d.rot90["버"] = "또";
    d.rot90["똥"] = "버0";

    auto flip = [&d](const char* a, const char* b) {
        d.rot180[a] = b;
        d.rot180[b] = a;
    };
    flip("눈", "곡");
    flip("물", "룸");
    flip("문", "곰");
    flip("폰", "궆");
    flip("논", "국");
    flip("곤", "군");
    flip("몸", "뭄");
    return d;
}

TranslitDict build_translit_dict() {
    TranslitDict d;
    // Injective syllable -> CJK homophone map. 상/해/한 stay out on purpose so
    // single-syllable hits stay unambiguous in short sentences.
    d.cjk_phonetic = {
        {"수", "水"}, {"남", "男"}, {"일", "一"}, {"이", "二"}, {"삼", "三"},
        {"사", "四"}, {"오", "五"}, {"육", "六"}, {"칠", "七"}, {"팔", "八"},
        {"구", "九"}, {"십", "十"}, {"산", "山"}, {"강", "江"}, {"문", "門"},
        {"왕", "王"}, {"금", "金"}, {"목", "木"}, {"토", "土"}, {"화", "火"},
        {"인", "人"}, {"심", "心"}, {"중", "中"}, {"대", "大"}, {"소", "小"},
        {"천", "天"}, {"가", "家"}, {"은", "恩"}, {"학", "學"}, {"생", "生"},
        {"신", "神"}, {"년", "年"}, {"월", "月"},
    };
    // Phrase -> foreign phonetic rendering; values keep the word-token count
    // of their keys.
    d.semantic_phrase = {
        {"부탁해", "구다사이"},
        {"부탁해요", "구다사이"},
        {"부탁합니다", "구다사이"},
        {"가지 말고", "돈트 고"},
        {"가지 마", "돈트 고"},
        {"고마워", "땡큐"},
        {"감사합니다", "땡큐"},
        {"미안해", "쏘리"},
        {"죄송합니다", "쏘리"},
        {"좋아요", "나이스"},
        {"진짜", "리얼리"},
        {"정말", "혼또니"},
        {"냄새", "스메리"},
        {"방", "룸"},
        {"오늘", "투데이"},
        {"내일", "투모로우"},
        {"친구", "프렌드"},
        {"안돼", "노노"},
        {"괜찮아", "오케이"},
        {"빨리", "하야쿠"},
        {"잠깐", "춋토"},
        {"역시", "야빠리"},
        {"모습", "애티튯"},
    };
    return d;
}

}  // namespace

const PhonDict& default_phon_dict() {
    static const PhonDict d = build_phon_dict();
    return d;
}

const GlyphDict& default_glyph_dict() {
    static const GlyphDict d = build_glyph_dict();
    return d;
}

const TranslitDict& default_translit_dict() {
    static const TranslitDict d = build_translit_dict();
    return d;
}

DictSet default_dicts() {
    return DictSet{default_phon_dict(), default_glyph_dict(), default_translit_dict()};
}

namespace {

int slot_index(const std::string& table, const std::string& jamo, size_t line_no) {
    std::u32string s = decode_utf8(jamo);
    if (s.size() != 1) throw ParseError("expected a single jamo in table " + table, line_no);
    try {
        if (table == "replace-initial" || table == "subsyl-consonant") return initial_index(s[0]);
        if (table == "replace-medial" || table == "insert-medial" || table == "subsyl-vowel") {
            return medial_index(s[0]);
        }
        return final_index(s[0]);
    } catch (const IndexOutOfRangeError&) {
        throw ParseError("jamo does not fit slot for table " + table, line_no);
    }
}

}  // namespace

void merge_dictionary_file(DictSet& base, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open dictionary file: " + path, 0);
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        size_t t1 = line.find('\t');
        size_t t2 = line.find('\t', t1 == std::string::npos ? t1 : t1 + 1);
        if (t1 == std::string::npos || t2 == std::string::npos) {
            throw ParseError("expected source<TAB>target<TAB>table", line_no);
        }
        std::string source = line.substr(0, t1);
        std::string target = line.substr(t1 + 1, t2 - t1 - 1);
        std::string table = line.substr(t2 + 1);
        if (source.empty() || target.empty()) throw ParseError("empty source or target", line_no);

        if (table == "replace-initial") {
            base.phon.initial_replace[slot_index(table, source, line_no)]
                .push_back(slot_index(table, target, line_no));
        } else if (table == "replace-medial") {
            base.phon.medial_replace[slot_index(table, source, line_no)]
                .push_back(slot_index(table, target, line_no));
        } else if (table == "replace-final") {
            base.phon.final_replace[slot_index(table, source, line_no)]
                .push_back(slot_index(table, target, line_no));
        } else if (table == "insert-medial") {
            base.phon.medial_insert[slot_index(table, source, line_no)]
                .push_back(slot_index(table, target, line_no));
        } else if (table == "lookalike-hangeul") {
            base.glyph.hangeul_lookalike[source].push_back(target);
        } else if (table == "lookalike-cross") {
            base.glyph.cross_lookalike[source].push_back(target);
        } else if (table == "subsyl-consonant") {
            base.glyph.subsyl_consonant[slot_index(table, source, line_no)] = target;
        } else if (table == "subsyl-vowel") {
            base.glyph.subsyl_vowel[slot_index(table, source, line_no)] = target;
        } else if (table == "rot90") {
            base.glyph.rot90[source] = target;
        } else if (table == "rot180") {
            base.glyph.rot180[source] = target;
            base.glyph.rot180[target] = source;
        } else if (table == "cjk-phonetic") {
            base.translit.cjk_phonetic[source] = target;
        } else if (table == "semantic-phrase") {
            base.translit.semantic_phrase[source] = target;
        } else {
            throw ParseError("unknown dictionary table: " + table, line_no);
        }
    }
}

}  // namespace koobf
