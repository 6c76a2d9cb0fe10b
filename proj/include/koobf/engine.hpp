#pragma once

#include <functional>
#include <string>
#include <vector>

#include "koobf/dicts.hpp"
#include "koobf/edits.hpp"
#include "koobf/rng.hpp"
#include "koobf/rules/transliteration.hpp"

namespace koobf {

enum class RuleCategory { Phonological, Iconological, Transliteration, Syntactic, Pragmatic };

struct RuleSpec {
    int id = 0;              // 1..17, stable across the toolkit
    RuleCategory category = RuleCategory::Phonological;
    double tau = 0.0;        // per-rule rewrite rate
    std::string name;
};

// Everything a rule application may need, bundled so apply_rule stays pure.
struct EngineContext {
    DictSet dicts = default_dicts();
    std::vector<std::string> symbol_pool;      // empty -> default pool
    TranslitBackend* translit_backend = nullptr;  // null -> offline fallback
    double max_length_ratio = 3.0;             // sanity condition (d)
};

// The 17 rules with the published rewrite rates.
const std::vector<RuleSpec>& default_rules();
const RuleSpec& rule_by_id(int id);

// Dispatches to the rule implementation; tau overrides the spec value when
// >= 0. Errors: NoEligibleTargetError and backend errors propagate.
Applied apply_rule(const std::string& text, const RuleSpec& rule, double tau, Rng& rng,
                   const EngineContext& ctx);

// Pair acceptance test: rule not yet applied, both sides changed, both sides
// still carry a Hangul-or-letter unit, neither side grew past the length cap.
bool sanity_check(const std::string& x_n, const std::string& x_t,
                  const std::string& y_n, const std::string& y_t,
                  const std::vector<int>& applied, int rule_id,
                  double max_length_ratio = 3.0);

// Per-pass provenance, enough to replay a rule application backwards.
struct RuleTrace {
    int rule_id = 0;
    std::vector<Edit> neutral_edits;
    std::vector<Edit> toxic_edits;
};

struct ObfuscationResult {
    std::string neutral_obf;
    std::string toxic_obf;
    std::vector<int> applied_rules;  // ordered, distinct
    int level = 0;                   // k
    std::vector<RuleTrace> traces;
};

// One pass per target rule: sample a candidate uniformly, apply it to both
// sides with its own tau, commit only if the sanity check passes and neither
// side lands back on its source text, else drop it from the pass's candidate
// set and resample. Candidates reset each pass to the full set minus
// already-applied ids. Errors: IncompleteError when a pass exhausts its
// candidates.
ObfuscationResult obfuscate_pair(const std::string& neutral, const std::string& toxic, int k,
                                 const std::vector<RuleSpec>& rules, Rng& rng,
                                 const EngineContext& ctx);

}  // namespace koobf
