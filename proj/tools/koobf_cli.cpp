#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "koobf/engine.hpp"
#include "koobf/errors.hpp"
#include "koobf/hangul.hpp"
#include "koobf/llm.hpp"
#include "koobf/metrics.hpp"
#include "koobf/pipeline.hpp"
#include "koobf/rules/phonological.hpp"

namespace {

using nlohmann::json;

// exit codes: 0 ok, 1 runtime, 2 usage (CLI11), 3 file, 4 config
constexpr int kRuntimeExit = 1;
constexpr int kFileExit = 3;
constexpr int kConfigExit = 4;

struct CliConfigError : koobf::Error {
    using Error::Error;
};

int fail(const char* kind, const std::string& message, int code) {
    std::cerr << json{{"error", kind}, {"message", message}}.dump() << "\n";
    return code;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw koobf::ParseError("cannot open " + path, 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw koobf::ParseError("cannot open " + path, 0);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

std::string chomp(std::string text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    return text;
}

std::vector<std::string> split_csv(const std::string& csv) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : csv) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::vector<int> parse_levels(const std::string& csv) {
    std::vector<int> levels;
    for (const auto& item : split_csv(csv)) {
        int k;
        try {
            k = std::stoi(item);
        } catch (const std::exception&) {
            throw CliConfigError("--levels expects integers, got \"" + item + "\"");
        }
        if (k < 2 || k > 4) {
            throw CliConfigError("level must be 2 (easy), 3 (normal) or 4 (hard)");
        }
        levels.push_back(k);
    }
    if (levels.empty()) throw CliConfigError("--levels is empty");
    return levels;
}

std::map<int, double> parse_rate_overrides(const std::vector<std::string>& entries) {
    std::map<int, double> overrides;
    for (const auto& entry : entries) {
        size_t eq = entry.find('=');
        if (eq == std::string::npos) {
            throw CliConfigError("--rate-override expects id=tau, got \"" + entry + "\"");
        }
        int id;
        double tau;
        try {
            id = std::stoi(entry.substr(0, eq));
            tau = std::stod(entry.substr(eq + 1));
        } catch (const std::exception&) {
            throw CliConfigError("--rate-override expects id=tau, got \"" + entry + "\"");
        }
        if (id < 1 || id > 17) throw CliConfigError("rule id must be 1..17");
        if (tau < 0.0 || tau > 1.0) throw CliConfigError("tau must be within [0, 1]");
        overrides[id] = tau;
    }
    return overrides;
}

struct BackendFlags {
    std::string kind = "offline";
    std::string base_url = "https://api.openai.com";
    std::string model = "gpt-5-nano";
    std::string replay_path;
    bool replay_only = false;
};

struct EngineFlags {
    std::vector<std::string> dict_files;
    std::string symbol_pool_csv;
    BackendFlags backend;
};

void add_engine_flags(CLI::App* cmd, EngineFlags& flags) {
    cmd->add_option("--dicts", flags.dict_files,
                    "Extra dictionary files merged over the built-in defaults");
    cmd->add_option("--symbol-pool", flags.symbol_pool_csv,
                    "Comma-separated symbol pool for rule 17");
    cmd->add_option("--translit-backend", flags.backend.kind,
                    "Backend for rules 12/14: offline or remote")
        ->check(CLI::IsMember({"offline", "remote"}));
    cmd->add_option("--llm-base-url", flags.backend.base_url, "Remote backend base URL");
    cmd->add_option("--llm-model", flags.backend.model, "Remote backend model name");
    cmd->add_option("--llm-replay", flags.backend.replay_path,
                    "JSONL replay file for remote responses");
    cmd->add_flag("--llm-replay-only", flags.backend.replay_only,
                  "Serve remote responses from the replay file only");
}

struct BuiltEngine {
    koobf::EngineContext ctx;
    std::unique_ptr<koobf::LlmBackend> backend;
};

BuiltEngine build_engine(const EngineFlags& flags) {
    BuiltEngine built;
    for (const auto& file : flags.dict_files) {
        koobf::merge_dictionary_file(built.ctx.dicts, file);
    }
    if (!flags.symbol_pool_csv.empty()) {
        built.ctx.symbol_pool = split_csv(flags.symbol_pool_csv);
        if (built.ctx.symbol_pool.empty()) throw CliConfigError("--symbol-pool is empty");
    }
    if (flags.backend.kind == "remote") {
        koobf::LlmConfig config;
        config.base_url = flags.backend.base_url;
        config.model = flags.backend.model;
        config.replay_path = flags.backend.replay_path;
        config.replay_only = flags.backend.replay_only;
        built.backend = std::make_unique<koobf::LlmBackend>(config);
        built.ctx.translit_backend = built.backend.get();
    }
    return built;
}

struct ProvenanceRow {
    int64_t pair_id = 0;
    int level = 0;
    std::vector<koobf::RuleTrace> traces;
};

std::vector<koobf::Edit> edits_from_json(const json& arr) {
    std::vector<koobf::Edit> out;
    for (const auto& e : arr) {
        out.push_back({e.at("offset").get<size_t>(), e.at("before").get<std::string>(),
                       e.at("after").get<std::string>()});
    }
    return out;
}

std::vector<ProvenanceRow> read_provenance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw koobf::ParseError("cannot open " + path, 0);
    std::vector<ProvenanceRow> rows;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        json row = json::parse(line, nullptr, false);
        if (row.is_discarded() || !row.contains("traces")) {
            throw koobf::ParseError("invalid provenance row in " + path, line_no);
        }
        ProvenanceRow parsed;
        parsed.pair_id = row.at("pair_id").get<int64_t>();
        std::string level = row.at("level").get<std::string>();
        parsed.level = level == "easy" ? 2 : level == "normal" ? 3 : 4;
        for (const auto& t : row["traces"]) {
            koobf::RuleTrace trace;
            trace.rule_id = t.at("rule").get<int>();
            trace.neutral_edits = edits_from_json(t.at("neutral_edits"));
            trace.toxic_edits = edits_from_json(t.at("toxic_edits"));
            parsed.traces.push_back(std::move(trace));
        }
        rows.push_back(std::move(parsed));
    }
    return rows;
}

json report_to_json(const koobf::GenerationReport& report) {
    json incomplete = json::object();
    for (const auto& [k, count] : report.incomplete_by_level) {
        incomplete[koobf::level_name(k)] = count;
    }
    json hist = json::object();
    for (const auto& [id, count] : report.stats.rule_histogram) {
        hist[std::to_string(id)] = count;
    }
    return json{{"seed", report.seed},
                {"config_digest", report.config_digest},
                {"source_rows", report.source_rows},
                {"filtered_short", report.filtered_short},
                {"retained_pairs", report.retained_pairs},
                {"incomplete_by_level", incomplete},
                {"stats",
                 {{"rule_histogram", hist},
                  {"distinct_rule_combinations", report.stats.distinct_rule_combinations},
                  {"avg_span", report.stats.avg_span},
                  {"split_counts", report.stats.split_counts},
                  {"records", report.stats.records}}}};
}

int run(int argc, char** argv) {
    CLI::App app{"Korean text obfuscation toolkit"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Key-value config file; command-line flags win");

    // generate
    auto* generate = app.add_subcommand("generate", "Build a leveled dataset from a pair corpus");
    std::string gen_input, gen_out_dir;
    uint64_t gen_seed = 0;
    std::string gen_levels = "2,3,4";
    int gen_jobs = 1;
    std::vector<std::string> gen_overrides;
    bool gen_provenance = false;
    EngineFlags gen_engine;
    generate->add_option("--input", gen_input, "Source corpus (.jsonl/.json or TSV)")->required();
    generate->add_option("--out-dir", gen_out_dir, "Output directory")->required();
    generate->add_option("--seed", gen_seed, "Global random seed");
    generate->add_option("--levels", gen_levels, "Comma-separated k values (2,3,4)");
    generate->add_option("--jobs", gen_jobs, "Worker threads; output is independent of N")
        ->check(CLI::PositiveNumber);
    generate->add_option("--rate-override", gen_overrides, "Per-rule tau override, id=tau");
    generate->add_flag("--with-provenance", gen_provenance,
                       "Also write *_provenance.jsonl edit traces");
    add_engine_flags(generate, gen_engine);

    // apply
    auto* apply = app.add_subcommand("apply", "Apply a single rule to text");
    int apply_rule_id = 0;
    std::string apply_direction, apply_text, apply_input;
    double apply_tau = -1.0;
    uint64_t apply_seed = 0;
    bool apply_json = false;
    EngineFlags apply_engine;
    apply->add_option("--rule", apply_rule_id, "Rule id, 1..17")->required();
    apply->add_option("--direction", apply_direction, "Liaison direction (rule 8)")
        ->check(CLI::IsMember({"forward", "reverse"}));
    apply->add_option("--tau", apply_tau, "Rewrite-rate override for this call");
    apply->add_option("--seed", apply_seed, "Random seed");
    apply->add_option("--text", apply_text, "Input text (UTF-8)");
    apply->add_option("--input", apply_input, "Input file; stdin when neither is given");
    apply->add_flag("--json", apply_json, "Emit {input, output, edits} JSON");
    add_engine_flags(apply, apply_engine);

    // stats
    auto* stats = app.add_subcommand("stats", "Summarize an existing dataset");
    std::vector<std::string> stats_inputs;
    stats->add_option("--input", stats_inputs, "Record files or a dataset directory")->required();

    // score
    auto* score = app.add_subcommand("score", "chrF between two parallel text files");
    std::string score_hyp, score_ref;
    int score_max_n = 6;
    double score_beta = 2.0;
    score->add_option("--hypothesis", score_hyp, "Hypothesis file, one sentence per line")
        ->required();
    score->add_option("--reference", score_ref, "Reference file, one sentence per line")
        ->required();
    score->add_option("--max-n", score_max_n, "Maximum n-gram order")->check(CLI::PositiveNumber);
    score->add_option("--beta", score_beta, "Recall weight");

    // invert
    auto* invert_cmd = app.add_subcommand("invert", "Replay provenance backwards");
    std::string inv_records, inv_provenance, inv_side = "toxic";
    bool inv_check = false;
    invert_cmd->add_option("--input", inv_records, "Dataset records (.jsonl)")->required();
    invert_cmd->add_option("--provenance", inv_provenance, "Matching *_provenance.jsonl file")
        ->required();
    invert_cmd->add_option("--side", inv_side, "Which side to restore")
        ->check(CLI::IsMember({"neutral", "toxic"}));
    invert_cmd->add_flag("--check", inv_check, "Exit nonzero unless inversion restores the source");

    CLI11_PARSE(app, argc, argv);

    try {
        if (generate->parsed()) {
            koobf::GenerationConfig config;
            config.seed = gen_seed;
            config.levels = parse_levels(gen_levels);
            config.jobs = gen_jobs;
            config.rate_overrides = parse_rate_overrides(gen_overrides);
            config.with_provenance = gen_provenance;
            BuiltEngine engine = build_engine(gen_engine);
            config.engine = engine.ctx;
            koobf::GenerationReport report =
                koobf::generate_dataset(gen_input, gen_out_dir, config);
            std::cout << report_to_json(report).dump(2) << "\n";
            return 0;
        }

        if (apply->parsed()) {
            std::string text;
            if (!apply_text.empty()) {
                text = apply_text;
            } else if (!apply_input.empty()) {
                text = chomp(read_file(apply_input));
            } else {
                std::ostringstream buf;
                buf << std::cin.rdbuf();
                text = chomp(buf.str());
            }
            text = koobf::normalize_hangul(text);
            BuiltEngine engine = build_engine(apply_engine);
            koobf::Rng rng(apply_seed);
            const koobf::RuleSpec& rule = koobf::rule_by_id(apply_rule_id);
            double tau = apply_tau;
            koobf::Applied out;
            if (rule.id == 8 && !apply_direction.empty()) {
                out = koobf::liaison(text,
                                     apply_direction == "forward"
                                         ? koobf::LiaisonDirection::Forward
                                         : koobf::LiaisonDirection::Reverse,
                                     tau >= 0.0 ? tau : rule.tau, rng);
            } else {
                out = koobf::apply_rule(text, rule, tau, rng, engine.ctx);
            }
            if (apply_json) {
                json edits = json::array();
                for (const auto& e : out.edits) {
                    edits.push_back(
                        {{"offset", e.offset}, {"before", e.before}, {"after", e.after}});
                }
                std::cout << json{{"input", text}, {"output", out.text}, {"edits", edits}}.dump()
                          << "\n";
            } else {
                std::cout << out.text << "\n";
            }
            return 0;
        }

        if (stats->parsed()) {
            std::vector<koobf::PairRecord> records = koobf::read_records(stats_inputs);
            koobf::DatasetStats computed = koobf::compute_stats(records);
            json hist = json::object();
            for (const auto& [id, count] : computed.rule_histogram) {
                hist[std::to_string(id)] = count;
            }
            std::cout << json{{"records", computed.records},
                              {"rule_histogram", hist},
                              {"distinct_rule_combinations", computed.distinct_rule_combinations},
                              {"avg_span", computed.avg_span},
                              {"split_counts", computed.split_counts}}
                             .dump(2)
                      << "\n";
            return 0;
        }

        if (score->parsed()) {
            std::vector<std::string> hyps = read_lines(score_hyp);
            std::vector<std::string> refs = read_lines(score_ref);
            if (hyps.size() != refs.size()) {
                throw CliConfigError("hypothesis and reference line counts differ");
            }
            json sentences = json::array();
            for (size_t i = 0; i < hyps.size(); ++i) {
                sentences.push_back(koobf::chrf(hyps[i], refs[i], score_max_n, score_beta));
            }
            double corpus = koobf::corpus_chrf(hyps, refs, score_max_n, score_beta);
            std::cout << json{{"corpus", corpus}, {"sentences", sentences}}.dump(2) << "\n";
            return 0;
        }

        if (invert_cmd->parsed()) {
            std::vector<koobf::PairRecord> records = koobf::read_records({inv_records});
            std::vector<ProvenanceRow> provenance = read_provenance(inv_provenance);
            bool toxic_side = inv_side == "toxic";
            std::map<std::pair<int64_t, int>, const ProvenanceRow*> prov_index;
            for (const auto& p : provenance) prov_index[{p.pair_id, p.level}] = &p;
            bool all_match = true;
            for (const auto& r : records) {
                auto it = prov_index.find({r.pair_id, r.level});
                if (it == prov_index.end()) {
                    throw koobf::ParseError("no provenance for pair " + std::to_string(r.pair_id),
                                            0);
                }
                bool invertible = true;
                for (const auto& t : it->second->traces) {
                    invertible = invertible && koobf::rule_invertible(t.rule_id);
                }
                if (!invertible) {
                    std::cout << json{{"pair_id", r.pair_id},
                                      {"level", koobf::level_name(r.level)},
                                      {"invertible", false}}
                                     .dump()
                              << "\n";
                    continue;
                }
                std::string restored = koobf::invert(toxic_side ? r.toxic_obf : r.neutral_obf,
                                                     it->second->traces, toxic_side);
                const std::string& source = toxic_side ? r.toxic : r.neutral;
                bool match = restored == source;
                all_match = all_match && match;
                std::cout << json{{"pair_id", r.pair_id},
                                  {"level", koobf::level_name(r.level)},
                                  {"restored", restored},
                                  {"match", match}}
                                 .dump()
                          << "\n";
            }
            if (inv_check && !all_match) {
                return fail("InversionMismatch", "some records did not invert to their source",
                            kRuntimeExit);
            }
            return 0;
        }
    } catch (const CliConfigError& e) {
        return fail("ConfigError", e.what(), kConfigExit);
    } catch (const koobf::ParseError& e) {
        return fail("ParseError", e.what(), kFileExit);
    } catch (const koobf::EmptyCorpusError& e) {
        return fail("EmptyCorpusError", e.what(), kFileExit);
    } catch (const koobf::IndexOutOfRangeError& e) {
        return fail("ConfigError", e.what(), kConfigExit);
    } catch (const koobf::Error& e) {
        return fail("RuntimeError", e.what(), kRuntimeExit);
    } catch (const std::exception& e) {
        return fail("RuntimeError", e.what(), kRuntimeExit);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
