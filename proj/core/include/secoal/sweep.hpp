#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "secoal/classify.hpp"
#include "secoal/corpus.hpp"
#include "secoal/json.hpp"

namespace secoal {

std::string_view tool_version();

/// Version tag stored in every cache line; a mismatch invalidates the cache.
std::string_view cache_version();

/// Names of the per-graph verdicts, in record order.
inline constexpr std::array<std::string_view, 17> kVerdictNames{
    "remark_sec_range", "remark_sec_le_c", "thm2_5",   "cor2_6", "cor2_7", "cor2_8",
    "cor2_9",           "thm2_10",         "thm2_11",  "thm3_1", "thm3_2", "cor3_3",
    "cor3_4",           "thm3_5",          "cor3_6",   "thm4_2_roundtrip", "thm4_3",
};

/// Which groups of work a sweep performs. Verdicts whose inputs were not
/// computed are recorded as null.
struct SweepChecks {
    bool domination = true;  ///< gamma, gamma_s
    bool sec = true;
    bool c = true;
    bool bounds = true;      ///< remark/thm2_x/cor2_x verdicts, constructive partition
    bool classify = true;    ///< family labels, thm3_1, thm3_2, cor3_3
    bool trees = true;       ///< cor3_4, thm3_5, cor3_6
    bool realize = true;     ///< thm4_2_roundtrip, thm4_3
    bool monotone = true;    ///< informational superset-monotonicity scan

    static SweepChecks all() { return {}; }
    static SweepChecks none();
    /// Comma-separated group names, or "all".
    static SweepChecks parse(std::string_view list);
    std::string to_string() const;
};

struct SweepOptions {
    SweepChecks checks;
    int jobs = 1;
    /// SEC and C are skipped (recorded as "skipped: cap") above this order...
    int cap = 7;
    /// ...except for trees up to this order.
    int tree_cap = 10;
    std::optional<std::filesystem::path> cache;
    /// Cached records re-computed and compared per run.
    std::size_t resample = 100;
};

/// Signature of the options that affect record contents.
std::string sweep_signature(const SweepOptions& options);

/// A discrepancy or informational observation. `witnesses` is an array of
/// objects, each independently replayable by replay_witness.
struct Finding {
    std::string check;
    std::string message;
    Json witnesses = Json::array();
    bool informational = false;
};

Json finding_to_json(const Finding& f);
Finding finding_from_json(const Json& j);

/// Re-verifies one witness object against the graph from scratch.
bool replay_witness(const Graph& g, const Json& witness);
/// True iff every witness of the finding replays.
bool replay_finding(const Graph& g, const Finding& f);

struct SweepRecord {
    std::string graph6;
    int n = 0;
    int m = 0;
    int delta = 0;
    int max_degree = 0;
    std::optional<int> gamma;
    std::optional<int> gamma_s;
    std::optional<int> sec;
    std::optional<int> c;
    std::optional<Partition> sec_witness;
    std::optional<FamilyLabel> family;
    std::vector<std::pair<std::string, std::optional<bool>>> verdicts;
    std::vector<Finding> findings;
    std::vector<std::string> skipped;

    std::optional<bool> verdict(std::string_view name) const;
};

/// All requested invariants and verdicts for one graph. Every false verdict
/// comes with a finding for that check.
SweepRecord compute_record(const Graph& g, const SweepOptions& options);

Json record_to_json(const SweepRecord& r);

struct VerdictTotals {
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t not_applicable = 0;
};

struct SweepReport {
    std::string tool_version;
    std::string corpus_digest;
    std::string checks;
    std::size_t graphs = 0;
    std::vector<std::pair<std::string, VerdictTotals>> totals;
    /// {graph6, check, finding} for every failing verdict.
    std::vector<Json> counterexamples;
    std::size_t informational_findings = 0;
    std::size_t errors = 0;
    std::size_t cache_hits = 0;
    std::size_t computed = 0;
    std::size_t resampled = 0;
    std::size_t resample_mismatches = 0;
    bool cache_invalidated = false;
    double seconds = 0;
};

Json report_to_json(const SweepReport& report);

struct SweepResult {
    /// One JSON record per corpus entry, in corpus order.
    std::vector<Json> records;
    SweepReport report;
};

/// Computes records in parallel over `options.jobs` workers and merges
/// them in corpus order, so records do not depend on the job count.
SweepResult run_sweep(const std::vector<CorpusEntry>& corpus, const SweepOptions& options);

/// Writes one record per line.
void write_jsonl(const std::filesystem::path& path, const std::vector<Json>& records);

/// Status of the two C_5 secure coalition graph claims (singleton partition
/// vs 2P_3, and {{0,4},{2},{1},{3}} vs the paw S_4+e), each as a finding
/// with a replayable "scg_claim" witness.
std::vector<Finding> adjudicate_c5_scg_claims();

}  // namespace secoal
