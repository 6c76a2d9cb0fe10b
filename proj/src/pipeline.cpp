#include "koobf/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "koobf/errors.hpp"
#include "koobf/hangul.hpp"

namespace koobf {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

size_t whitespace_token_count(const std::string& text) {
    size_t count = 0;
    bool in_token = false;
    for (char c : text) {
        bool ws = c == ' ' || c == '\t' || c == '\n' || c == '\r';
        if (!ws && !in_token) ++count;
        in_token = !ws;
    }
    return count;
}

bool has_extension(const std::string& path, const char* ext) {
    std::string lower = fs::path(path).extension().string();
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return lower == ext;
}

}  // namespace

LoadResult load_source(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path, 0);

    bool as_json = has_extension(path, ".jsonl") || has_extension(path, ".json");
    LoadResult result;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        ++result.source_rows;

        std::string neutral, toxic;
        if (as_json) {
            json row = json::parse(line, nullptr, false);
            if (row.is_discarded() || !row.contains("neutral") || !row.contains("toxic") ||
                !row["neutral"].is_string() || !row["toxic"].is_string()) {
                throw ParseError("expected {\"neutral\":..,\"toxic\":..}", line_no);
            }
            neutral = row["neutral"].get<std::string>();
            toxic = row["toxic"].get<std::string>();
        } else {
            size_t tab = line.find('\t');
            if (tab == std::string::npos) throw ParseError("expected neutral<TAB>toxic", line_no);
            neutral = line.substr(0, tab);
            toxic = line.substr(tab + 1);
            if (toxic.find('\t') != std::string::npos) {
                throw ParseError("expected exactly two columns", line_no);
            }
        }
        neutral = normalize_hangul(neutral);
        toxic = normalize_hangul(toxic);
        if (whitespace_token_count(neutral) <= 2 || whitespace_token_count(toxic) <= 2) {
            ++result.filtered_short;
            continue;
        }
        result.pairs.push_back({std::move(neutral), std::move(toxic)});
    }
    if (result.source_rows == 0) throw EmptyCorpusError("no rows in " + path);
    if (result.pairs.empty()) {
        throw EmptyCorpusError("every row of " + path + " was filtered as too short");
    }
    return result;
}

const char* level_name(int k) {
    switch (k) {
        case 2: return "easy";
        case 3: return "normal";
        case 4: return "hard";
        default: throw IndexOutOfRangeError("no level name for k = " + std::to_string(k));
    }
}

namespace {

std::vector<RuleSpec> effective_rules(const GenerationConfig& config) {
    std::vector<RuleSpec> rules = default_rules();
    for (auto& rule : rules) {
        auto it = config.rate_overrides.find(rule.id);
        if (it != config.rate_overrides.end()) rule.tau = it->second;
    }
    return rules;
}

}  // namespace

BuildResult build_dataset(const std::vector<SourcePair>& pairs, const GenerationConfig& config) {
    BuildResult result;
    std::vector<RuleSpec> rules = effective_rules(config);
    for (int k : config.levels) result.incomplete_by_level[k] = 0;

    struct Task {
        int k;
        size_t pair_index;
    };
    std::vector<Task> tasks;
    for (int k : config.levels) {
        for (size_t i = 0; i < pairs.size(); ++i) tasks.push_back({k, i});
    }

    std::vector<std::optional<PairRecord>> slots(tasks.size());
    auto run_task = [&](size_t t) {
        const Task& task = tasks[t];
        Rng rng(derive_seed(config.seed, task.pair_index, task.k));
        try {
            ObfuscationResult obf = obfuscate_pair(pairs[task.pair_index].neutral,
                                                   pairs[task.pair_index].toxic, task.k, rules,
                                                   rng, config.engine);
            PairRecord record;
            record.pair_id = static_cast<int64_t>(task.pair_index);
            record.neutral = pairs[task.pair_index].neutral;
            record.toxic = pairs[task.pair_index].toxic;
            record.neutral_obf = obf.neutral_obf;
            record.toxic_obf = obf.toxic_obf;
            record.rules = obf.applied_rules;
            record.level = task.k;
            record.traces = obf.traces;
            slots[t] = std::move(record);
        } catch (const IncompleteError&) {
            slots[t] = std::nullopt;
        }
    };

    // a remote backend caches responses, so only the offline path fans out
    int jobs = config.engine.translit_backend == nullptr ? config.jobs : 1;
    if (jobs > 1 && tasks.size() > 1) {
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (size_t t = next.fetch_add(1); t < tasks.size(); t = next.fetch_add(1)) {
                run_task(t);
            }
        };
        std::vector<std::thread> threads;
        size_t n = std::min<size_t>(static_cast<size_t>(jobs), tasks.size());
        threads.reserve(n);
        for (size_t i = 0; i < n; ++i) threads.emplace_back(worker);
        for (auto& th : threads) th.join();
    } else {
        for (size_t t = 0; t < tasks.size(); ++t) run_task(t);
    }

    for (size_t t = 0; t < tasks.size(); ++t) {
        if (slots[t].has_value()) {
            result.records.push_back(std::move(*slots[t]));
        } else {
            ++result.incomplete_by_level[tasks[t].k];
        }
    }
    return result;
}

SplitCounts split_sizes(size_t n) {
    SplitCounts counts;
    counts.train = n * 8 / 10;
    counts.valid = n / 10;
    counts.test = n / 10;
    size_t remainder = n - counts.train - counts.valid - counts.test;
    if (remainder >= 1) ++counts.test;
    if (remainder == 2) ++counts.valid;
    return counts;
}

void assign_splits(std::vector<PairRecord>& records, uint64_t seed) {
    std::vector<int64_t> ids;
    for (const auto& r : records) ids.push_back(r.pair_id);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

    // dedicated stream, outside the (pair, k) grid used for obfuscation
    Rng rng(derive_seed(seed, 0x535054, 99));
    rng.shuffle(ids);

    SplitCounts counts = split_sizes(ids.size());
    std::map<int64_t, const char*> split_of;
    for (size_t i = 0; i < ids.size(); ++i) {
        if (i < counts.train) {
            split_of[ids[i]] = "train";
        } else if (i < counts.train + counts.valid) {
            split_of[ids[i]] = "valid";
        } else {
            split_of[ids[i]] = "test";
        }
    }
    for (auto& r : records) r.split = split_of.at(r.pair_id);
}

DatasetStats compute_stats(const std::vector<PairRecord>& records) {
    DatasetStats stats;
    for (int id = 1; id <= 17; ++id) stats.rule_histogram[id] = 0;

    std::set<std::vector<int>> combinations;
    std::map<std::string, std::pair<double, size_t>> span_acc;  // sum, count
    for (const auto& r : records) {
        for (int id : r.rules) ++stats.rule_histogram[id];
        combinations.insert(r.rules);
        double span = (static_cast<double>(whitespace_token_count(r.neutral_obf)) +
                       static_cast<double>(whitespace_token_count(r.toxic_obf))) /
                      2.0;
        auto& level_acc = span_acc[level_name(r.level)];
        level_acc.first += span;
        level_acc.second += 1;
        auto& total_acc = span_acc["total"];
        total_acc.first += span;
        total_acc.second += 1;
        if (!r.split.empty()) ++stats.split_counts[level_name(r.level)][r.split];
    }
    stats.distinct_rule_combinations = combinations.size();
    for (const auto& [name, acc] : span_acc) {
        stats.avg_span[name] = acc.second ? acc.first / static_cast<double>(acc.second) : 0.0;
    }
    stats.records = records.size();
    return stats;
}

namespace {

json record_to_json(const PairRecord& r) {
    return json{{"pair_id", r.pair_id},     {"neutral", r.neutral},
                {"toxic", r.toxic},         {"neutral_obf", r.neutral_obf},
                {"toxic_obf", r.toxic_obf}, {"rules", r.rules},
                {"level", level_name(r.level)}, {"split", r.split}};
}

json edits_to_json(const std::vector<Edit>& edits) {
    json out = json::array();
    for (const auto& e : edits) {
        out.push_back({{"offset", e.offset}, {"before", e.before}, {"after", e.after}});
    }
    return out;
}

std::vector<Edit> edits_from_json(const json& arr) {
    std::vector<Edit> out;
    for (const auto& e : arr) {
        out.push_back({e.at("offset").get<size_t>(), e.at("before").get<std::string>(),
                       e.at("after").get<std::string>()});
    }
    return out;
}

json stats_to_json(const DatasetStats& stats) {
    json hist = json::object();
    for (const auto& [id, count] : stats.rule_histogram) hist[std::to_string(id)] = count;
    return json{{"rule_histogram", hist},
                {"distinct_rule_combinations", stats.distinct_rule_combinations},
                {"avg_span", stats.avg_span},
                {"split_counts", stats.split_counts},
                {"records", stats.records}};
}

int level_from_name(const std::string& name, size_t line_no) {
    if (name == "easy") return 2;
    if (name == "normal") return 3;
    if (name == "hard") return 4;
    throw ParseError("unknown level name: " + name, line_no);
}

}  // namespace

GenerationReport generate_dataset(const std::string& input_path, const std::string& out_dir,
                                  const GenerationConfig& config) {
    LoadResult loaded = load_source(input_path);
    BuildResult built = build_dataset(loaded.pairs, config);
    assign_splits(built.records, config.seed);

    fs::create_directories(out_dir);
    static const char* kSplits[] = {"train", "valid", "test"};
    for (int k : config.levels) {
        for (const char* split : kSplits) {
            fs::path data_path = fs::path(out_dir) / (std::string(level_name(k)) + "_" + split + ".jsonl");
            std::ofstream data_out(data_path, std::ios::binary);
            std::ofstream prov_out;
            if (config.with_provenance) {
                fs::path prov_path = fs::path(out_dir) /
                                     (std::string(level_name(k)) + "_" + split + "_provenance.jsonl");
                prov_out.open(prov_path, std::ios::binary);
            }
            for (const auto& r : built.records) {
                if (r.level != k || r.split != split) continue;
                data_out << record_to_json(r).dump() << "\n";
                if (config.with_provenance) {
                    json traces = json::array();
                    for (const auto& t : r.traces) {
                        traces.push_back({{"rule", t.rule_id},
                                          {"neutral_edits", edits_to_json(t.neutral_edits)},
                                          {"toxic_edits", edits_to_json(t.toxic_edits)}});
                    }
                    prov_out << json{{"pair_id", r.pair_id},
                                     {"level", level_name(r.level)},
                                     {"traces", traces}}
                                    .dump()
                             << "\n";
                }
            }
        }
    }

    GenerationReport report;
    report.seed = config.seed;
    report.config_digest = config_digest(config);
    report.source_rows = loaded.source_rows;
    report.filtered_short = loaded.filtered_short;
    report.retained_pairs = loaded.pairs.size();
    report.incomplete_by_level = built.incomplete_by_level;
    report.stats = compute_stats(built.records);

    json incomplete = json::object();
    for (const auto& [k, count] : report.incomplete_by_level) {
        incomplete[level_name(k)] = count;
    }
    json report_json = {{"seed", report.seed},
                        {"config_digest", report.config_digest},
                        {"source_rows", report.source_rows},
                        {"filtered_short", report.filtered_short},
                        {"retained_pairs", report.retained_pairs},
                        {"incomplete_by_level", incomplete},
                        {"stats", stats_to_json(report.stats)}};
    std::ofstream report_out(fs::path(out_dir) / "report.json", std::ios::binary);
    report_out << report_json.dump(2) << "\n";
    return report;
}

std::vector<PairRecord> read_records(const std::vector<std::string>& paths) {
    std::vector<std::string> files;
    for (const auto& path : paths) {
        if (fs::is_directory(path)) {
            std::vector<std::string> found;
            for (const auto& entry : fs::directory_iterator(path)) {
                std::string name = entry.path().filename().string();
                if (entry.path().extension() == ".jsonl" &&
                    name.find("_provenance") == std::string::npos) {
                    found.push_back(entry.path().string());
                }
            }
            std::sort(found.begin(), found.end());
            files.insert(files.end(), found.begin(), found.end());
        } else {
            files.push_back(path);
        }
    }
    if (files.empty()) throw EmptyCorpusError("no record files given");

    std::vector<PairRecord> records;
    for (const auto& file : files) {
        std::ifstream in(file);
        if (!in) throw ParseError("cannot open " + file, 0);
        std::string line;
        size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (line.empty()) continue;
            json row = json::parse(line, nullptr, false);
            if (row.is_discarded()) throw ParseError("invalid JSON in " + file, line_no);
            PairRecord r;
            r.pair_id = row.at("pair_id").get<int64_t>();
            r.neutral = row.at("neutral").get<std::string>();
            r.toxic = row.at("toxic").get<std::string>();
            r.neutral_obf = row.at("neutral_obf").get<std::string>();
            r.toxic_obf = row.at("toxic_obf").get<std::string>();
            r.rules = row.at("rules").get<std::vector<int>>();
            r.level = level_from_name(row.at("level").get<std::string>(), line_no);
            r.split = row.value("split", "");
            if (row.contains("traces")) {
                for (const auto& t : row["traces"]) {
                    RuleTrace trace;
                    trace.rule_id = t.at("rule").get<int>();
                    trace.neutral_edits = edits_from_json(t.at("neutral_edits"));
                    trace.toxic_edits = edits_from_json(t.at("toxic_edits"));
                    r.traces.push_back(std::move(trace));
                }
            }
            records.push_back(std::move(r));
        }
    }
    if (records.empty()) throw EmptyCorpusError("record files contain no rows");
    return records;
}

std::string config_digest(const GenerationConfig& config) {
    json canon = {{"seed", config.seed},
                  {"levels", config.levels},
                  {"rate_overrides", json::object()},
                  {"symbol_pool", config.engine.symbol_pool},
                  {"max_length_ratio", config.engine.max_length_ratio},
                  {"backend", config.engine.translit_backend ? "remote" : "offline"}};
    for (const auto& [id, tau] : config.rate_overrides) {
        canon["rate_overrides"][std::to_string(id)] = tau;
    }
    std::string text = canon.dump();
    uint64_t hash = 1469598103934665603ull;  // FNV-1a
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex << hash;
    return out.str();
}

}  // namespace koobf
