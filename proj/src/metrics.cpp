#include "koobf/metrics.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "koobf/errors.hpp"
#include "koobf/hangul.hpp"

namespace koobf {

namespace {

bool is_whitespace_scalar(char32_t c) {
    return (c >= 0x09 && c <= 0x0D) || c == 0x20 || c == 0xA0 || c == 0x3000;
}

std::u32string strip_whitespace(const std::string& text) {
    std::u32string out;
    for (char32_t c : decode_utf8(text)) {
        if (!is_whitespace_scalar(c)) out += c;
    }
    return out;
}

struct OrderStats {
    size_t overlap = 0;
    size_t hyp_total = 0;
    size_t ref_total = 0;
};

// counts per n-gram order; an order is present when either side has a gram
std::vector<OrderStats> ngram_stats(const std::u32string& hyp, const std::u32string& ref,
                                    int max_n) {
    std::vector<OrderStats> stats(static_cast<size_t>(max_n));
    for (int n = 1; n <= max_n; ++n) {
        OrderStats& s = stats[static_cast<size_t>(n - 1)];
        std::map<std::u32string, size_t> ref_grams;
        if (ref.size() >= static_cast<size_t>(n)) {
            for (size_t i = 0; i + n <= ref.size(); ++i) {
                ++ref_grams[ref.substr(i, static_cast<size_t>(n))];
                ++s.ref_total;
            }
        }
        if (hyp.size() >= static_cast<size_t>(n)) {
            for (size_t i = 0; i + n <= hyp.size(); ++i) {
                ++s.hyp_total;
                auto it = ref_grams.find(hyp.substr(i, static_cast<size_t>(n)));
                if (it != ref_grams.end() && it->second > 0) {
                    --it->second;
                    ++s.overlap;
                }
            }
        }
    }
    return stats;
}

double fscore(double precision, double recall, double beta) {
    double b2 = beta * beta;
    double denom = b2 * precision + recall;
    if (denom == 0.0) return 0.0;
    return 100.0 * (1.0 + b2) * precision * recall / denom;
}

}  // namespace

double chrf(const std::string& hypothesis, const std::string& reference, int max_n, double beta) {
    std::u32string hyp = strip_whitespace(hypothesis);
    std::u32string ref = strip_whitespace(reference);
    if (ref.empty()) throw EmptyReferenceError("reference is empty after whitespace removal");

    auto stats = ngram_stats(hyp, ref, max_n);
    double precision_sum = 0.0, recall_sum = 0.0;
    int orders = 0;
    for (const auto& s : stats) {
        if (s.hyp_total == 0 && s.ref_total == 0) continue;  // too short on both sides
        ++orders;
        precision_sum += s.hyp_total ? static_cast<double>(s.overlap) / s.hyp_total : 0.0;
        recall_sum += s.ref_total ? static_cast<double>(s.overlap) / s.ref_total : 0.0;
    }
    if (orders == 0) return 0.0;
    return fscore(precision_sum / orders, recall_sum / orders, beta);
}

double corpus_chrf(const std::vector<std::string>& hypotheses,
                   const std::vector<std::string>& references, int max_n, double beta) {
    if (hypotheses.size() != references.size()) {
        throw std::invalid_argument("hypothesis/reference count mismatch");
    }
    if (hypotheses.empty()) throw EmptyCorpusError("no sentence pairs to score");

    std::vector<OrderStats> total(static_cast<size_t>(max_n));
    bool any_ref = false;
    for (size_t i = 0; i < hypotheses.size(); ++i) {
        std::u32string hyp = strip_whitespace(hypotheses[i]);
        std::u32string ref = strip_whitespace(references[i]);
        if (!ref.empty()) any_ref = true;
        auto stats = ngram_stats(hyp, ref, max_n);
        for (size_t n = 0; n < stats.size(); ++n) {
            total[n].overlap += stats[n].overlap;
            total[n].hyp_total += stats[n].hyp_total;
            total[n].ref_total += stats[n].ref_total;
        }
    }
    if (!any_ref) throw EmptyReferenceError("every reference is empty after whitespace removal");

    double precision_sum = 0.0, recall_sum = 0.0;
    int orders = 0;
    for (const auto& s : total) {
        if (s.hyp_total == 0 && s.ref_total == 0) continue;
        ++orders;
        precision_sum += s.hyp_total ? static_cast<double>(s.overlap) / s.hyp_total : 0.0;
        recall_sum += s.ref_total ? static_cast<double>(s.overlap) / s.ref_total : 0.0;
    }
    if (orders == 0) return 0.0;
    return fscore(precision_sum / orders, recall_sum / orders, beta);
}

bool rule_invertible(int rule_id) {
    static const std::set<int> invertible = {9, 10, 11, 13, 15, 17};
    return invertible.count(rule_id) > 0;
}

namespace {

std::string undo_edits(std::string text, const std::vector<Edit>& edits, int rule_id) {
    // edits were recorded left-to-right against the output; undo newest-first
    // so earlier offsets stay valid
    for (auto it = edits.rbegin(); it != edits.rend(); ++it) {
        const Edit& e = *it;
        if (e.offset > text.size() || text.compare(e.offset, e.after.size(), e.after) != 0) {
            throw std::invalid_argument("provenance does not match the text at rule " +
                                        std::to_string(rule_id));
        }
        text.replace(e.offset, e.after.size(), e.before);
    }
    return text;
}

}  // namespace

std::string invert(const std::string& text, const std::vector<RuleTrace>& traces,
                   bool toxic_side) {
    for (const auto& trace : traces) {
        if (!rule_invertible(trace.rule_id)) {
            throw NonInvertibleRuleError("rule " + std::to_string(trace.rule_id) +
                                         " is not replayable");
        }
    }
    std::string out = text;
    for (auto it = traces.rbegin(); it != traces.rend(); ++it) {
        out = undo_edits(std::move(out), toxic_side ? it->toxic_edits : it->neutral_edits,
                         it->rule_id);
    }
    return out;
}

std::string invert_edits(const std::string& text,
                         const std::vector<std::pair<int, std::vector<Edit>>>& rule_edits) {
    for (const auto& [rule_id, edits] : rule_edits) {
        if (!rule_invertible(rule_id)) {
            throw NonInvertibleRuleError("rule " + std::to_string(rule_id) +
                                         " is not replayable");
        }
    }
    std::string out = text;
    for (auto it = rule_edits.rbegin(); it != rule_edits.rend(); ++it) {
        out = undo_edits(std::move(out), it->second, it->first);
    }
    return out;
}

}  // namespace koobf
