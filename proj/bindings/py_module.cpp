#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "koobf/engine.hpp"
#include "koobf/errors.hpp"
#include "koobf/hangul.hpp"
#include "koobf/metrics.hpp"
#include "koobf/pipeline.hpp"
#include "koobf/rules/transliteration.hpp"

namespace py = pybind11;

namespace {

char32_t single_scalar(const std::string& text) {
    std::u32string scalars = koobf::decode_utf8(text);
    if (scalars.size() != 1) {
        throw std::invalid_argument("expected exactly one character");
    }
    return scalars[0];
}

py::list edits_to_py(const std::vector<koobf::Edit>& edits) {
    py::list out;
    for (const auto& e : edits) {
        py::dict d;
        d["offset"] = e.offset;
        d["before"] = e.before;
        d["after"] = e.after;
        out.append(d);
    }
    return out;
}

std::vector<koobf::Edit> edits_from_py(const py::sequence& seq) {
    std::vector<koobf::Edit> out;
    for (const auto& item : seq) {
        py::dict d = item.cast<py::dict>();
        out.push_back({d["offset"].cast<size_t>(), d["before"].cast<std::string>(),
                       d["after"].cast<std::string>()});
    }
    return out;
}

std::vector<koobf::RuleTrace> traces_from_py(const py::sequence& seq) {
    std::vector<koobf::RuleTrace> out;
    for (const auto& item : seq) {
        py::dict d = item.cast<py::dict>();
        koobf::RuleTrace t;
        t.rule_id = d["rule"].cast<int>();
        t.neutral_edits = edits_from_py(d["neutral_edits"].cast<py::sequence>());
        t.toxic_edits = edits_from_py(d["toxic_edits"].cast<py::sequence>());
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Korean text obfuscation toolkit core";

    // base first: pybind tries translators newest-first, so the specific
    // registrations below win over this catch-all
    py::register_exception<koobf::Error>(m, "Error", PyExc_ValueError);
    py::register_exception<koobf::NoEligibleTargetError>(m, "NoEligibleTargetError",
                                                         PyExc_ValueError);
    py::register_exception<koobf::IncompleteError>(m, "IncompleteError", PyExc_RuntimeError);
    py::register_exception<koobf::NonInvertibleRuleError>(m, "NonInvertibleRuleError",
                                                          PyExc_ValueError);
    py::register_exception<koobf::EmptyReferenceError>(m, "EmptyReferenceError", PyExc_ValueError);
    py::register_exception<koobf::ParseError>(m, "ParseError", PyExc_ValueError);

    m.def(
        "decompose",
        [](const std::string& syllable) {
            koobf::JamoTriple j = koobf::decompose(single_scalar(syllable));
            return py::make_tuple(j.initial, j.medial, j.final);
        },
        py::arg("syllable"), "Split a precomposed syllable into (initial, medial, final) indices");

    m.def(
        "compose",
        [](int initial, int medial, int final_idx) {
            return koobf::encode_utf8(
                std::u32string(1, koobf::compose({initial, medial, final_idx})));
        },
        py::arg("initial"), py::arg("medial"), py::arg("final") = 0,
        "Compose jamo indices into a syllable");

    m.def(
        "normalize",
        [](const std::string& text) { return koobf::normalize_hangul(text); }, py::arg("text"),
        "Recompose decomposed jamo sequences into syllable blocks");

    m.def(
        "romanize",
        [](const std::string& syllable) {
            return koobf::romanize_syllable(single_scalar(syllable));
        },
        py::arg("syllable"), "Standard romanization of one syllable");

    m.def("rules", [] {
        py::list out;
        for (const auto& rule : koobf::default_rules()) {
            py::dict d;
            d["id"] = rule.id;
            static const char* kCategories[] = {"phonological", "iconological", "transliteration",
                                                "syntactic", "pragmatic"};
            d["category"] = kCategories[static_cast<int>(rule.category)];
            d["tau"] = rule.tau;
            d["name"] = rule.name;
            out.append(d);
        }
        return out;
    });

    m.def(
        "apply_rule",
        [](const std::string& text, int rule_id, uint64_t seed, double tau) {
            koobf::Rng rng(seed);
            koobf::EngineContext ctx;
            koobf::Applied applied =
                koobf::apply_rule(text, koobf::rule_by_id(rule_id), tau, rng, ctx);
            py::dict out;
            out["output"] = applied.text;
            out["edits"] = edits_to_py(applied.edits);
            return out;
        },
        py::arg("text"), py::arg("rule_id"), py::arg("seed") = 0, py::arg("tau") = -1.0,
        "Apply one rule; tau < 0 uses the rule's published rate");

    m.def(
        "obfuscate_pair",
        [](const std::string& neutral, const std::string& toxic, int k, uint64_t seed) {
            koobf::Rng rng(seed);
            koobf::EngineContext ctx;
            koobf::ObfuscationResult r =
                koobf::obfuscate_pair(neutral, toxic, k, koobf::default_rules(), rng, ctx);
            py::dict out;
            out["neutral_obf"] = r.neutral_obf;
            out["toxic_obf"] = r.toxic_obf;
            out["rules"] = r.applied_rules;
            out["level"] = r.level;
            py::list traces;
            for (const auto& t : r.traces) {
                py::dict td;
                td["rule"] = t.rule_id;
                td["neutral_edits"] = edits_to_py(t.neutral_edits);
                td["toxic_edits"] = edits_to_py(t.toxic_edits);
                traces.append(td);
            }
            out["traces"] = traces;
            return out;
        },
        py::arg("neutral"), py::arg("toxic"), py::arg("k"), py::arg("seed") = 0,
        "Obfuscate a neutral/toxic pair with k distinct rules");

    m.def("chrf", &koobf::chrf, py::arg("hypothesis"), py::arg("reference"), py::arg("max_n") = 6,
          py::arg("beta") = 2.0);

    m.def("corpus_chrf", &koobf::corpus_chrf, py::arg("hypotheses"), py::arg("references"),
          py::arg("max_n") = 6, py::arg("beta") = 2.0);

    m.def("rule_invertible", &koobf::rule_invertible, py::arg("rule_id"));

    m.def(
        "invert",
        [](const std::string& text, const py::sequence& traces, bool toxic_side) {
            return koobf::invert(text, traces_from_py(traces), toxic_side);
        },
        py::arg("text"), py::arg("traces"), py::arg("toxic_side") = false,
        "Replay recorded edits backwards to restore the pre-obfuscation text");

    m.def(
        "generate_dataset",
        [](const std::string& input_path, const std::string& out_dir, uint64_t seed,
           const std::vector<int>& levels, int jobs, bool with_provenance) {
            koobf::GenerationConfig config;
            config.seed = seed;
            config.levels = levels;
            config.jobs = jobs;
            config.with_provenance = with_provenance;
            koobf::GenerationReport report =
                koobf::generate_dataset(input_path, out_dir, config);
            py::dict out;
            out["seed"] = report.seed;
            out["config_digest"] = report.config_digest;
            out["source_rows"] = report.source_rows;
            out["filtered_short"] = report.filtered_short;
            out["retained_pairs"] = report.retained_pairs;
            py::dict incomplete;
            for (const auto& [k, count] : report.incomplete_by_level) {
                incomplete[koobf::level_name(k)] = count;
            }
            out["incomplete_by_level"] = incomplete;
            py::dict hist;
            for (const auto& [id, count] : report.stats.rule_histogram) {
                hist[py::int_(id)] = count;
            }
            py::dict stats;
            stats["rule_histogram"] = hist;
            stats["distinct_rule_combinations"] = report.stats.distinct_rule_combinations;
            stats["avg_span"] = report.stats.avg_span;
            stats["split_counts"] = report.stats.split_counts;
            stats["records"] = report.stats.records;
            out["stats"] = stats;
            return out;
        },
        py::arg("input_path"), py::arg("out_dir"), py::arg("seed") = 0,
        py::arg("levels") = std::vector<int>{2, 3, 4}, py::arg("jobs") = 1,
        py::arg("with_provenance") = false,
        "Build the leveled dataset files and report under out_dir");
}
