#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "koobf/engine.hpp"

namespace koobf {

struct SourcePair {
    std::string neutral;
    std::string toxic;
};

// UTF-8 JSON Lines ({"neutral":..,"toxic":..}) or TSV (neutral<TAB>toxic),
// chosen by extension (.jsonl/.json vs anything else). Hangul sequences are
// recomposed on ingestion; rows where either side has <= 2 whitespace tokens
// are dropped and counted. Errors: ParseError (with line), EmptyCorpusError.
struct LoadResult {
    std::vector<SourcePair> pairs;
    size_t filtered_short = 0;
    size_t source_rows = 0;
};
LoadResult load_source(const std::string& path);

struct PairRecord {
    int64_t pair_id = 0;
    std::string neutral;
    std::string toxic;
    std::string neutral_obf;
    std::string toxic_obf;
    std::vector<int> rules;
    int level = 0;               // k: 2 easy, 3 normal, 4 hard
    std::string split;           // train/valid/test
    std::vector<RuleTrace> traces;
};

const char* level_name(int k);  // easy/normal/hard

struct GenerationConfig {
    uint64_t seed = 0;
    std::vector<int> levels = {2, 3, 4};
    int jobs = 1;
    std::map<int, double> rate_overrides;  // rule id -> tau
    EngineContext engine;
    bool with_provenance = false;  // also write *_provenance.jsonl on write_dataset
};

struct BuildResult {
    std::vector<PairRecord> records;           // grouped by level, source order
    std::map<int, size_t> incomplete_by_level; // k -> dropped count
};

// One record per retained pair per level; records of a dropped (Incomplete)
// pass are skipped and tallied. Deterministic for fixed seed regardless of
// jobs: every (pair, k) obfuscation draws from its own derived rng stream.
BuildResult build_dataset(const std::vector<SourcePair>& pairs, const GenerationConfig& config);

// 8:1:1 over source pairs: floor counts, remainder to test then valid; every
// level-record of a pair lands in the same split.
void assign_splits(std::vector<PairRecord>& records, uint64_t seed);

struct SplitCounts {
    size_t train = 0;
    size_t valid = 0;
    size_t test = 0;
};
SplitCounts split_sizes(size_t n);

struct DatasetStats {
    std::map<int, size_t> rule_histogram;            // 1..17, zero-filled
    size_t distinct_rule_combinations = 0;           // ordered rule lists
    std::map<std::string, double> avg_span;          // level name + "total"
    std::map<std::string, std::map<std::string, size_t>> split_counts;  // level -> split -> n
    size_t records = 0;
};
DatasetStats compute_stats(const std::vector<PairRecord>& records);

struct GenerationReport {
    uint64_t seed = 0;
    std::string config_digest;
    size_t source_rows = 0;
    size_t filtered_short = 0;
    size_t retained_pairs = 0;
    std::map<int, size_t> incomplete_by_level;
    DatasetStats stats;
};

// Writes {level}_{split}.jsonl (+ optional provenance files) and report.json
// under out_dir; returns the report. Byte-identical for identical inputs.
GenerationReport generate_dataset(const std::string& input_path, const std::string& out_dir,
                                  const GenerationConfig& config);

// Re-reads written records (a directory of *.jsonl or explicit files).
std::vector<PairRecord> read_records(const std::vector<std::string>& paths);

std::string config_digest(const GenerationConfig& config);

}  // namespace koobf
