#include "secoal/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "secoal/coalition.hpp"
#include "secoal/domination.hpp"
#include "secoal/graph_io.hpp"
#include "secoal/scg.hpp"

#ifndef SECOAL_VERSION_STRING
#define SECOAL_VERSION_STRING "0.0.0"
#endif

namespace secoal {

std::string_view tool_version()
{
    return "secoal " SECOAL_VERSION_STRING;
}

std::string_view cache_version()
{
    return "secoal-cache/1 " SECOAL_VERSION_STRING;
}

namespace {

// Limits for the per-graph scans that are exponential but cheap at desk scale.
constexpr int kDominationScanCap = 24;
constexpr int kMonotonicityScanCap = 12;
constexpr int kReplaySearchCap = 10;

struct CheckName {
    std::string_view name;
    bool SweepChecks::*flag;
};

constexpr std::array<CheckName, 8> kCheckNames{{
    {"domination", &SweepChecks::domination},
    {"sec", &SweepChecks::sec},
    {"c", &SweepChecks::c},
    {"bounds", &SweepChecks::bounds},
    {"classify", &SweepChecks::classify},
    {"trees", &SweepChecks::trees},
    {"realize", &SweepChecks::realize},
    {"monotone", &SweepChecks::monotone},
}};

}  // namespace

SweepChecks SweepChecks::none()
{
    SweepChecks c;
    for (const auto& entry : kCheckNames) c.*entry.flag = false;
    return c;
}

SweepChecks SweepChecks::parse(std::string_view list)
{
    if (list.empty() || list == "all") return all();
    SweepChecks checks = none();
    std::size_t pos = 0;
    while (pos <= list.size()) {
        auto end = list.find(',', pos);
        if (end == std::string_view::npos) end = list.size();
        const std::string_view name = list.substr(pos, end - pos);
        bool known = false;
        if (name == "all") {
            checks = all();
            known = true;
        }
        for (const auto& entry : kCheckNames) {
            if (entry.name == name) {
                checks.*entry.flag = true;
                known = true;
            }
        }
        if (!known) throw ParseError("unknown check '" + std::string(name) + "'");
        pos = end + 1;
    }
    return checks;
}

std::string SweepChecks::to_string() const
{
    std::string out;
    for (const auto& entry : kCheckNames) {
        if (!(this->*entry.flag)) continue;
        if (!out.empty()) out += ',';
        out += entry.name;
    }
    return out.empty() ? "none" : out;
}

std::string sweep_signature(const SweepOptions& options)
{
    return options.checks.to_string() + ";cap=" + std::to_string(options.cap) +
           ";tree_cap=" + std::to_string(options.tree_cap);
}

Json finding_to_json(const Finding& f)
{
    Json j;
    j["check"] = f.check;
    j["message"] = f.message;
    j["informational"] = f.informational;
    j["witnesses"] = f.witnesses;
    return j;
}

Finding finding_from_json(const Json& j)
{
    Finding f;
    f.check = j.at("check").get<std::string>();
    f.message = j.at("message").get<std::string>();
    f.informational = j.value("informational", false);
    f.witnesses = j.at("witnesses");
    return f;
}

namespace {

Json sec_partition_witness(const Partition& p, bool expect_valid)
{
    Json w;
    w["kind"] = "sec_partition";
    w["partition"] = partition_to_json(p);
    w["expect_valid"] = expect_valid;
    return w;
}

Json sec_value_witness(const Partition& p, int count)
{
    Json w;
    w["kind"] = "sec_value";
    w["partition"] = partition_to_json(p);
    w["count"] = count;
    return w;
}

Json c_value_witness(const Partition& p, int count)
{
    Json w;
    w["kind"] = "c_value";
    w["partition"] = partition_to_json(p);
    w["count"] = count;
    return w;
}

Json secure_set_witness(VertexSet s, bool expect_secure)
{
    Json w;
    w["kind"] = "secure_set";
    w["set"] = vertex_set_to_json(s);
    w["expect_secure"] = expect_secure;
    return w;
}

Json realization_witness(const Realization& r, bool expect_verified)
{
    Json w;
    w["kind"] = "realization";
    w["host_graph6"] = write_graph6(r.host);
    w["partition"] = partition_to_json(r.partition);
    w["base_map"] = r.base_map;
    w["expect_verified"] = expect_verified;
    return w;
}

bool replay_or_false(const auto& body)
{
    try {
        return body();
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace

bool replay_witness(const Graph& g, const Json& w)
{
    return replay_or_false([&] {
        const std::string kind = w.at("kind").get<std::string>();
        if (kind == "sec_partition") {
            return is_sec_partition(g, partition_from_json(w.at("partition"))) == w.at("expect_valid").get<bool>();
        }
        if (kind == "sec_value" || kind == "c_value") {
            const Partition p = partition_from_json(w.at("partition"));
            const int count = w.at("count").get<int>();
            const bool sec = kind == "sec_value";
            if (static_cast<int>(p.size()) != count) return false;
            if (!(sec ? is_sec_partition(g, p) : is_c_partition(g, p))) return false;
            if (g.order() > kReplaySearchCap) return true;
            const SearchOptions options{.cap = kReplaySearchCap, .use_secure_domination_bound = false};
            return (sec ? sec_number(g, options) : coalition_number(g, options)).count == count;
        }
        if (kind == "secure_set") {
            return is_secure_dominating(g, vertex_set_from_json(w.at("set"))) == w.at("expect_secure").get<bool>();
        }
        if (kind == "coalition_count") {
            const Partition p = partition_from_json(w.at("partition"));
            const auto part = w.at("part").get<std::size_t>();
            const int count = w.at("count").get<int>();
            const int limit = coalition_count_bound(g, domination_number(g).count);
            const auto counts = coalition_counts(g, p);
            return part < counts.size() && counts[part] == count && limit == w.at("limit").get<int>() && count > limit;
        }
        if (kind == "realization") {
            Realization r{.target = g,
                          .host = parse_graph6(w.at("host_graph6").get<std::string>(), kMaxVertexCap),
                          .partition = partition_from_json(w.at("partition")),
                          .base_map = w.at("base_map").get<std::vector<std::size_t>>()};
            return verify_realization(r).has_value() != w.at("expect_verified").get<bool>();
        }
        if (kind == "monotonicity") {
            const VertexSet s = vertex_set_from_json(w.at("set"));
            const Vertex v = w.at("added").get<int>();
            return !s.contains(v) && is_secure_dominating(g, s) && !is_secure_dominating(g, s.with(v));
        }
        if (kind == "scg_claim") {
            const Partition p = partition_from_json(w.at("partition"));
            const Graph claimed = parse_graph6(w.at("claimed_graph6").get<std::string>());
            const ScgClaimReport report = check_scg_claim(g, p, claimed);
            if (report.verdict.valid != w.at("sec_partition_valid").get<bool>()) return false;
            if (report.claim_holds != w.at("claim_holds").get<bool>()) return false;
            if (report.scg && w.contains("scg_graph6")) {
                return write_graph6(*report.scg) == w.at("scg_graph6").get<std::string>();
            }
            return true;
        }
        return false;
    });
}

bool replay_finding(const Graph& g, const Finding& f)
{
    if (!f.witnesses.is_array() || f.witnesses.empty()) return false;
    for (const auto& w : f.witnesses) {
        if (!replay_witness(g, w)) return false;
    }
    return true;
}

std::optional<bool> SweepRecord::verdict(std::string_view name) const
{
    for (const auto& [key, value] : verdicts) {
        if (key == name) return value;
    }
    return std::nullopt;
}

namespace {

bool is_path_graph(const Graph& g)
{
    return is_tree(g) && g.max_degree() <= 2;
}

bool is_k1_union_clique(const Graph& g)
{
    const auto comps = components(g);
    if (comps.size() != 2) return false;
    return (comps[0].size() == 1 || comps[1].size() == 1) && g.is_clique(comps[0]) && g.is_clique(comps[1]);
}

class RecordBuilder {
public:
    RecordBuilder(const Graph& g, const SweepOptions& options) : g_(g), options_(options)
    {
        r_.graph6 = write_graph6(g);
        r_.n = g.order();
        r_.m = g.size();
        r_.delta = g.min_degree();
        r_.max_degree = g.max_degree();
        for (auto name : kVerdictNames) r_.verdicts.emplace_back(std::string(name), std::nullopt);
    }

    SweepRecord build()
    {
        const SweepChecks& checks = options_.checks;
        const bool tree = is_tree(g_);
        const bool within_cap = r_.n <= options_.cap || (tree && r_.n <= options_.tree_cap);
        const bool need_sec = checks.sec || checks.bounds || checks.classify || checks.trees;
        const bool need_c = checks.c || checks.bounds;
        const bool need_gamma = checks.domination || checks.bounds;

        if (need_gamma) {
            if (r_.n <= kDominationScanCap) {
                gamma_ = domination_number(g_);
                gamma_s_ = secure_domination_number(g_);
                r_.gamma = gamma_->count;
                r_.gamma_s = gamma_s_->count;
            } else {
                r_.skipped.push_back("gamma: cap");
            }
        }
        if (need_sec) {
            if (within_cap) {
                // No n - gamma_s + 2 shortcut: that bound is one of the checks.
                auto result = sec_number(g_, {.cap = r_.n, .use_secure_domination_bound = false});
                r_.sec = result.count;
                r_.sec_witness = std::move(result.witness);
            } else {
                r_.skipped.push_back("sec: cap");
            }
        }
        if (need_c) {
            if (within_cap) {
                auto result = coalition_number(g_, {.cap = r_.n});
                r_.c = result.count;
                c_witness_ = std::move(result.witness);
            } else {
                r_.skipped.push_back("c: cap");
            }
        }
        if (checks.classify) r_.family = classify_family(g_);

        if (checks.bounds) bound_verdicts();
        if (checks.classify) classify_verdicts();
        if (checks.trees && tree) tree_verdicts();
        if (checks.realize) realize_verdicts();
        if (checks.monotone) monotonicity_scan();
        return std::move(r_);
    }

private:
    void set(std::string_view name, bool value, std::string message, Json witnesses)
    {
        for (auto& [key, v] : r_.verdicts) {
            if (key == name) v = value;
        }
        if (!value) r_.findings.push_back({std::string(name), std::move(message), std::move(witnesses), false});
    }

    Json sec_evidence() const
    {
        Json w = Json::array();
        if (r_.sec) w.push_back(sec_value_witness(*r_.sec_witness, *r_.sec));
        return w;
    }

    // Evidence for a claim about whether SEC equals n: the maximum partition,
    // and when SEC < n the failing singleton partition.
    Json sec_equals_n_evidence() const
    {
        Json w = sec_evidence();
        const Partition singles = Partition::singletons(r_.n);
        w.push_back(sec_partition_witness(singles, is_sec_partition(g_, singles)));
        return w;
    }

    void bound_verdicts()
    {
        const bool complete = g_.is_complete();
        const bool edgeless = g_.is_edgeless();
        const VertexSet isolated = g_.isolated_vertices();
        const int n = r_.n;

        if (r_.sec) {
            const int sec = *r_.sec;
            set("remark_sec_range", 1 <= sec && sec <= n, "SEC outside [1, n]", sec_evidence());
            if (r_.c) {
                Json w = sec_evidence();
                w.push_back(c_value_witness(c_witness_, *r_.c));
                set("remark_sec_le_c", sec <= *r_.c, "SEC exceeds C", std::move(w));
            }
            if (!complete && !edgeless) set("cor2_8", sec >= 3, "SEC below 3 for a graph that is neither complete nor empty", sec_evidence());
            const bool k1 = n == 1;
            const bool k2 = n == 2 && r_.m == 1;
            const bool empty_graph = n >= 2 && edgeless;
            set("cor2_9", (sec == 1) == k1 && (sec == 2) == (k2 || empty_graph),
                "SEC in {1,2} does not match K_1 / K_2 / empty-graph characterization", sec_evidence());
            if (r_.gamma_s) {
                Json w = sec_evidence();
                w.push_back(secure_set_witness(gamma_s_->witness, true));
                set("thm2_11", sec <= n - *r_.gamma_s + 2, "SEC exceeds n - gamma_s + 2", std::move(w));
            }
        }

        ConstructedPartition built = construct_sec_partition(g_, r_.sec ? r_.n : 0);
        const bool built_valid = is_sec_partition(g_, built.partition);
        const bool by_construction = built.method != ConstructionMethod::SearchFallback;
        auto construction_evidence = [&] {
            Json w = Json::array();
            if (!by_construction) {
                const int delta = r_.delta;
                for (Vertex v = 0; v < n; ++v) {
                    if (g_.degree(v) == delta || (!isolated.empty() && !isolated.contains(v))) {
                        w.push_back(sec_partition_witness(min_degree_partition(g_, v), false));
                        break;
                    }
                }
            }
            if (r_.sec) w.push_back(sec_value_witness(*r_.sec_witness, *r_.sec));
            w.push_back(sec_partition_witness(built.partition, built_valid));
            return w;
        };

        if (isolated.empty() && !complete) {
            const int target = r_.delta + 2;
            const bool ok = by_construction && built_valid && static_cast<int>(built.partition.size()) == target &&
                            (!r_.sec || *r_.sec >= target);
            set("thm2_5", ok, "minimum-degree construction did not give a sec-partition of size delta+2",
                construction_evidence());
        }
        if (!isolated.empty() && !edgeless) {
            const int target = induced_subgraph(g_, g_.vertices() - isolated).min_degree() + 2;
            const bool ok = by_construction && built_valid && static_cast<int>(built.partition.size()) == target &&
                            (!r_.sec || *r_.sec >= target);
            set("cor2_6", ok, "isolate-aware construction did not give a sec-partition of size delta(G')+2",
                construction_evidence());
        }
        set("cor2_7", built_valid, "no sec-partition could be constructed", construction_evidence());

        if (gamma_) {
            const int limit = coalition_count_bound(g_, gamma_->count);
            bool ok = true;
            Json w = Json::array();
            std::vector<Partition> produced{built.partition};
            if (r_.sec_witness) produced.push_back(*r_.sec_witness);
            for (const Partition& p : produced) {
                if (!is_sec_partition(g_, p)) continue;
                const auto counts = coalition_counts(g_, p);
                for (std::size_t i = 0; i < counts.size(); ++i) {
                    if (counts[i] <= limit) continue;
                    ok = false;
                    Json e;
                    e["kind"] = "coalition_count";
                    e["partition"] = partition_to_json(p);
                    e["part"] = i;
                    e["count"] = counts[i];
                    e["limit"] = limit;
                    w.push_back(std::move(e));
                }
            }
            set("thm2_10", ok, "a part forms more secure coalitions than max{Delta+1, n-gamma}", std::move(w));
        }
    }

    void classify_verdicts()
    {
        if (!r_.sec) return;
        const bool sec_is_n = *r_.sec == r_.n;
        const bool predicted = predict_sec_equals_n(g_);
        if (is_connected(g_)) {
            set("thm3_1", predicted == sec_is_n,
                std::string("family classification predicts SEC ") + (predicted ? "=" : "!=") + " n but SEC = " +
                    std::to_string(*r_.sec) + " (labels " + r_.family->to_string() + ")",
                sec_equals_n_evidence());
        } else {
            set("thm3_2", predicted == sec_is_n,
                std::string("disconnected graph: K_p u K_q test says ") + (predicted ? "yes" : "no") +
                    " but SEC = " + std::to_string(*r_.sec),
                sec_equals_n_evidence());
        }
        // K_1 is connected; the corollary is about disconnected graphs.
        if (r_.delta == 0 && r_.n >= 2) {
            set("cor3_3", is_k1_union_clique(g_) == sec_is_n, "delta = 0: SEC = n does not match K_1 u K_{n-1}",
                sec_equals_n_evidence());
        }
    }

    void tree_verdicts()
    {
        if (!r_.sec) return;
        const int n = r_.n;
        const int sec = *r_.sec;
        const bool path = is_path_graph(g_);
        const bool s4 = n == 4 && g_.max_degree() == 3;
        const bool p5 = path && n == 5;
        set("cor3_4", (sec == n) == (path && n <= 4), "tree with SEC = n does not match P_n, n <= 4",
            sec_equals_n_evidence());
        set("cor3_6", (sec == n - 1) == (s4 || p5), "tree with SEC = n-1 does not match S_4 or P_5", sec_evidence());
        if (n >= 5 && !p5) set("thm3_5", sec <= n - 2, "tree other than P_5 with SEC > n-2", sec_evidence());
    }

    void realize_verdicts()
    {
        const bool isolated = r_.delta == 0;
        if (!isolated) {
            RealizeResult result;
            try {
                result = realize_as_scg(g_, kMaxVertexCap);
            } catch (const CapExceeded&) {
                r_.skipped.push_back("realize: cap");
                return;
            }
            bool ok = result.status == RealizeStatus::Verified;
            std::string message = result.message;
            if (ok && result.realization->construction == HostConstruction::Generic) {
                const bool formulas = result.realization->host_order == expected_host_order(g_) &&
                                      result.realization->host_size == expected_host_size(g_);
                if (!formulas) message = "host order/size differ from 2n+mbar and C(n,2)+n(n-1)+2mbar(n-2)";
                ok = formulas;
            }
            Json w = Json::array();
            if (result.realization) w.push_back(realization_witness(*result.realization, result.status == RealizeStatus::Verified));
            set("thm4_2_roundtrip", ok, message, std::move(w));
            if (ok && result.round_robin_partition) {
                Realization rr = *result.realization;
                rr.partition = *result.round_robin_partition;
                r_.findings.push_back({"thm4_2_placement",
                                       "round-robin placement fails (" + result.round_robin_gap->reason +
                                           "); placement " + std::to_string(result.realization->placements_tried) +
                                           " verified",
                                       Json::array({realization_witness(rr, false),
                                                    realization_witness(*result.realization, true)}),
                                       true});
            }
        } else if (r_.m > 0) {
            const RealizeResult result = realize_as_scg(g_, kMaxVertexCap);
            Json w = Json::array();
            if (result.realization) w.push_back(realization_witness(*result.realization, true));
            set("thm4_3", result.status == RealizeStatus::Unrealizable,
                "a graph with an isolated vertex and an edge was realized", std::move(w));
        }
    }

    void monotonicity_scan()
    {
        if (r_.n > kMonotonicityScanCap) {
            r_.skipped.push_back("monotone: cap");
            return;
        }
        if (auto hit = find_superset_monotonicity_counterexample(g_)) {
            Json w;
            w["kind"] = "monotonicity";
            w["set"] = vertex_set_to_json(hit->set);
            w["added"] = hit->added;
            r_.findings.push_back({"superset_monotone",
                                   "secure dominating set whose one-vertex superset is not secure dominating",
                                   Json::array({w}), true});
        }
    }

    const Graph& g_;
    const SweepOptions& options_;
    SweepRecord r_;
    std::optional<DominationResult> gamma_;
    std::optional<DominationResult> gamma_s_;
    Partition c_witness_;
};

Json optional_int(const std::optional<int>& v)
{
    return v ? Json(*v) : Json(nullptr);
}

}  // namespace

SweepRecord compute_record(const Graph& g, const SweepOptions& options)
{
    return RecordBuilder(g, options).build();
}

Json record_to_json(const SweepRecord& r)
{
    Json j;
    j["graph6"] = r.graph6;
    j["n"] = r.n;
    j["m"] = r.m;
    j["delta"] = r.delta;
    j["Delta"] = r.max_degree;
    j["gamma"] = optional_int(r.gamma);
    j["gamma_s"] = optional_int(r.gamma_s);
    j["sec"] = optional_int(r.sec);
    j["c"] = optional_int(r.c);
    j["sec_witness"] = r.sec_witness ? partition_to_json(*r.sec_witness) : Json(nullptr);
    j["family_labels"] = r.family ? family_label_to_json(*r.family) : Json(nullptr);
    Json verdicts = Json::object();
    for (const auto& [name, value] : r.verdicts) verdicts[name] = value ? Json(*value) : Json(nullptr);
    j["bound_verdicts"] = std::move(verdicts);
    Json findings = Json::array();
    for (const Finding& f : r.findings) findings.push_back(finding_to_json(f));
    j["findings"] = std::move(findings);
    j["skipped"] = r.skipped;
    return j;
}

Json report_to_json(const SweepReport& report)
{
    Json j;
    j["tool_version"] = report.tool_version;
    j["corpus_digest"] = report.corpus_digest;
    j["checks"] = report.checks;
    j["graphs"] = report.graphs;
    Json totals = Json::object();
    for (const auto& [name, t] : report.totals) {
        totals[name] = {{"pass", t.pass}, {"fail", t.fail}, {"not_applicable", t.not_applicable}};
    }
    j["totals"] = std::move(totals);
    j["counterexamples"] = report.counterexamples;
    j["informational_findings"] = report.informational_findings;
    j["errors"] = report.errors;
    j["cache"] = {{"hits", report.cache_hits},
                  {"computed", report.computed},
                  {"resampled", report.resampled},
                  {"resample_mismatches", report.resample_mismatches},
                  {"invalidated", report.cache_invalidated}};
    j["runtime_seconds"] = report.seconds;
    return j;
}

namespace {

struct LoadedCache {
    std::unordered_map<std::string, Json> records;
    bool invalidated = false;
};

LoadedCache load_cache(const std::filesystem::path& path, const std::string& signature)
{
    LoadedCache cache;
    std::ifstream in(path);
    if (!in) return cache;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        Json entry = Json::parse(line, nullptr, false);
        if (entry.is_discarded() || !entry.is_object() || entry.value("cache_version", "") != cache_version()) {
            cache.records.clear();
            cache.invalidated = true;
            return cache;
        }
        if (entry.value("signature", "") != signature) continue;
        cache.records[entry.at("graph6").get<std::string>()] = entry.at("record");
    }
    return cache;
}

Json compute_record_json(const CorpusEntry& entry, const SweepOptions& options)
{
    try {
        return record_to_json(compute_record(entry.graph, options));
    } catch (const std::exception& e) {
        Json j;
        j["graph6"] = entry.graph6;
        j["error"] = e.what();
        return j;
    }
}

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& body)
{
    const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace

SweepResult run_sweep(const std::vector<CorpusEntry>& corpus, const SweepOptions& options)
{
    const auto start = std::chrono::steady_clock::now();
    if (options.jobs < 1) throw InvalidArgument("jobs must be at least 1");

    SweepResult result;
    SweepReport& report = result.report;
    report.tool_version = std::string(tool_version());
    report.checks = options.checks.to_string();
    report.graphs = corpus.size();
    std::string keys;
    for (const auto& e : corpus) keys += e.graph6 + '\n';
    report.corpus_digest = sha256_hex(keys);

    const std::string signature = sweep_signature(options);
    LoadedCache cache;
    if (options.cache) cache = load_cache(*options.cache, signature);
    report.cache_invalidated = cache.invalidated;

    result.records.assign(corpus.size(), Json());
    std::vector<std::size_t> missing;
    std::vector<std::size_t> cached;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        auto it = cache.records.find(corpus[i].graph6);
        if (it != cache.records.end()) {
            result.records[i] = it->second;
            cached.push_back(i);
        } else {
            missing.push_back(i);
        }
    }
    report.cache_hits = cached.size();

    // Cached records are re-derived for a random sample and must match.
    std::mt19937_64 rng(std::stoull(report.corpus_digest.substr(0, 16), nullptr, 16));
    std::shuffle(cached.begin(), cached.end(), rng);
    cached.resize(std::min(cached.size(), options.resample));
    std::vector<std::size_t> work = missing;
    work.insert(work.end(), cached.begin(), cached.end());

    std::vector<Json> fresh(work.size());
    parallel_for(work.size(), options.jobs, [&](std::size_t k) { fresh[k] = compute_record_json(corpus[work[k]], options); });
    report.computed = missing.size();
    report.resampled = cached.size();

    for (std::size_t k = 0; k < work.size(); ++k) {
        const std::size_t i = work[k];
        if (k >= missing.size() && fresh[k] != result.records[i]) {
            ++report.resample_mismatches;
            report.counterexamples.push_back(
                {{"graph6", corpus[i].graph6}, {"check", "cache"}, {"message", "cached record differs from a fresh computation"}});
        }
        result.records[i] = std::move(fresh[k]);
    }

    if (options.cache) {
        const bool rewrite = cache.invalidated || report.resample_mismatches > 0;
        std::ofstream out(*options.cache, rewrite ? std::ios::trunc : std::ios::app);
        if (!out) throw ParseError("cannot write cache '" + options.cache->string() + "'");
        auto emit = [&](std::size_t i) {
            if (result.records[i].contains("error")) return;
            Json entry;
            entry["cache_version"] = cache_version();
            entry["signature"] = signature;
            entry["graph6"] = corpus[i].graph6;
            entry["record"] = result.records[i];
            out << entry.dump() << '\n';
        };
        if (rewrite) {
            for (std::size_t i = 0; i < corpus.size(); ++i) emit(i);
        } else {
            for (std::size_t i : missing) emit(i);
        }
    }

    for (auto name : kVerdictNames) report.totals.emplace_back(std::string(name), VerdictTotals{});
    for (const Json& record : result.records) {
        if (record.contains("error")) {
            ++report.errors;
            report.counterexamples.push_back(
                {{"graph6", record.at("graph6")}, {"check", "error"}, {"message", record.at("error")}});
            for (auto& [name, t] : report.totals) ++t.not_applicable;
            continue;
        }
        const Json& verdicts = record.at("bound_verdicts");
        for (auto& [name, t] : report.totals) {
            const Json& v = verdicts.at(name);
            if (v.is_null()) ++t.not_applicable;
            else if (v.get<bool>()) ++t.pass;
            else ++t.fail;
        }
        for (const Json& f : record.at("findings")) {
            if (f.value("informational", false)) {
                ++report.informational_findings;
                continue;
            }
            report.counterexamples.push_back({{"graph6", record.at("graph6")}, {"check", f.at("check")}, {"finding", f}});
        }
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

void write_jsonl(const std::filesystem::path& path, const std::vector<Json>& records)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ParseError("cannot write '" + path.string() + "'");
    for (const Json& r : records) out << r.dump() << '\n';
    if (!out) throw ParseError("write to '" + path.string() + "' failed");
}

std::vector<Finding> adjudicate_c5_scg_claims()
{
    const Graph c5 = generate(Family::Cycle, 5);
    const Graph two_p3 = disjoint_union(generate(Family::Path, 3), generate(Family::Path, 3));
    const std::vector<Edge> paw_edges{{0, 1}, {0, 2}, {0, 3}, {1, 2}};
    const Graph paw = Graph::from_edges(4, paw_edges);

    struct Claim {
        std::string name;
        Partition partition;
        Graph claimed;
        std::string description;
    };
    const std::vector<Claim> claims{
        {"c5_singleton_scg", Partition::singletons(5), two_p3, "SCG(C_5, singletons) ~ 2P_3"},
        {"c5_pi2_scg", Partition::parse("0,4;2;1;3"), paw, "SCG(C_5, {{0,4},{2},{1},{3}}) ~ S_4+e"},
    };

    std::vector<Finding> out;
    for (const Claim& claim : claims) {
        const ScgClaimReport report = check_scg_claim(c5, claim.partition, claim.claimed);
        Json w;
        w["kind"] = "scg_claim";
        w["graph6"] = write_graph6(c5);
        w["partition"] = partition_to_json(claim.partition);
        w["claimed_graph6"] = write_graph6(claim.claimed);
        w["sec_partition_valid"] = report.verdict.valid;
        w["claim_holds"] = report.claim_holds;
        if (report.scg) {
            w["scg_graph6"] = write_graph6(*report.scg);
            w["scg_edges"] = write_edge_list(*report.scg);
        }
        w["verdict"] = verdict_to_json(report.verdict, claim.partition);
        out.push_back({claim.name, claim.description + ": " + (report.claim_holds ? "holds. " : "does not hold. ") + report.summary,
                       Json::array({w}), report.claim_holds});
    }
    return out;
}

}  // namespace secoal
