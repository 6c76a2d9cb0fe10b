#pragma once

#include <string>
#include <vector>

#include "koobf/engine.hpp"

namespace koobf {

// Character n-gram F-score, 0..100. Whitespace is stripped before n-gram
// extraction; n-gram orders with no grams on either side are skipped; orders
// are macro-averaged and combined with beta weighting recall.
// Errors: EmptyReferenceError (reference empty after whitespace removal).
double chrf(const std::string& hypothesis, const std::string& reference,
            int max_n = 6, double beta = 2.0);

// Aggregated n-gram statistics over a parallel corpus (micro average).
double corpus_chrf(const std::vector<std::string>& hypotheses,
                   const std::vector<std::string>& references,
                   int max_n = 6, double beta = 2.0);

// Rules whose applications are exactly replayable from provenance.
bool rule_invertible(int rule_id);

// Undoes recorded applications newest-first. Errors: NonInvertibleRuleError
// if any trace carries a non-invertible rule id; std::invalid_argument when
// the provenance does not match the text.
std::string invert(const std::string& text, const std::vector<RuleTrace>& traces,
                   bool toxic_side = false);

// Single-sided variant used by the CLI.
std::string invert_edits(const std::string& text, const std::vector<std::pair<int, std::vector<Edit>>>& rule_edits);

}  // namespace koobf
