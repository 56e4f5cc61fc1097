// secoal: command-line front end for the secoal library.
//
// Exit codes: 0 ok, 1 usage or input error, 2 cap exceeded, 3 internal
// inconsistency / construction gap / cache mismatch, 4 unrealizable target,
// 5 partition is not a sec-partition (verify only).

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "secoal/classify.hpp"
#include "secoal/coalition.hpp"
#include "secoal/corpus.hpp"
#include "secoal/domination.hpp"
#include "secoal/errors.hpp"
#include "secoal/graph_io.hpp"
#include "secoal/json.hpp"
#include "secoal/scg.hpp"
#include "secoal/sweep.hpp"
#include "secoal/trees.hpp"

namespace {

using namespace secoal;

enum Exit : int {
    kOk = 0,
    kUsage = 1,
    kCap = 2,
    kInconsistent = 3,
    kUnrealizable = 4,
    kNotSecPartition = 5,
};

std::string set_text(VertexSet s)
{
    std::string out = "{";
    bool first = true;
    for (Vertex v : s) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

Json graph_header(const Graph& g)
{
    Json j;
    j["graph6"] = write_graph6(g);
    j["n"] = g.order();
    j["m"] = g.size();
    return j;
}

struct ComputeArgs {
    std::string what;
    std::string input;
    int cap = kDefaultSearchCap;
    bool cap_given = false;
};

int cmd_compute(const ComputeArgs& a, bool json)
{
    const Graph g = resolve_graph_input(a.input, kMaxVertexCap);
    Json out = graph_header(g);
    std::string text;

    if (a.what == "gamma" || a.what == "gamma-s") {
        const bool secure = a.what == "gamma-s";
        const auto r = secure ? secure_domination_number(g) : domination_number(g);
        out[secure ? "gamma_s" : "gamma"] = r.count;
        out["witness"] = vertex_set_to_json(r.witness);
        if (secure) out["certificate"] = certificate_to_json(certify_secure_domination(g, r.witness));
        text = std::string(secure ? "gamma_s" : "gamma") + " = " + std::to_string(r.count) + "\nwitness: " +
               set_text(r.witness) + "\n";
    } else if (a.what == "sec" || a.what == "c") {
        const bool sec = a.what == "sec";
        // Trees get the larger default search cap.
        const int cap = a.cap_given ? a.cap : (is_tree(g) ? kDefaultTreeSearchCap : kDefaultSearchCap);
        const auto r = sec ? sec_number(g, {.cap = cap}) : coalition_number(g, {.cap = cap});
        out[sec ? "sec" : "c"] = r.count;
        out["witness"] = partition_to_json(r.witness);
        out["witness_spec"] = r.witness.to_string();
        text = std::string(sec ? "SEC" : "C") + " = " + std::to_string(r.count) + "\nwitness: " +
               r.witness.to_string() + "\n";
    } else if (a.what == "classify") {
        const FamilyLabel label = classify_family(g);
        const bool predicted = predict_sec_equals_n(g);
        out["family_labels"] = family_label_to_json(label);
        out["connected"] = is_connected(g);
        out["predict_sec_equals_n"] = predicted;
        out["scg_realizable"] = is_scg_realizable(g);
        text = "families: " + label.to_string() + "\npredicted SEC = n: " + (predicted ? "yes" : "no") +
               "\nSCG realizable: " + (is_scg_realizable(g) ? "yes" : "no") + "\n";
        if (is_tree(g) && g.order() <= (a.cap_given ? a.cap : kDefaultTreeSearchCap)) {
            const TreeVerdict tv = tree_sec_profile(g, a.cap_given ? a.cap : kDefaultTreeSearchCap);
            out["tree"] = tree_verdict_to_json(tv);
            text += "tree category: " + std::string(tree_category_name(tv.predicted)) + ", SEC = " +
                    std::to_string(tv.sec) + (tv.agrees ? " (agrees)" : " (DISAGREES)") + "\n";
            if (!tv.agrees) {
                std::cout << (json ? out.dump(2) + "\n" : text);
                return kInconsistent;
            }
        }
    } else {
        throw InvalidArgument("unknown quantity '" + a.what + "'");
    }
    std::cout << (json ? out.dump(2) + "\n" : text);
    return kOk;
}

struct VerifyArgs {
    std::string input;
    std::string partition;
    std::optional<std::string> claim_scg;
};

int cmd_verify(const VerifyArgs& a, bool json)
{
    const Graph g = resolve_graph_input(a.input, kMaxVertexCap);
    const Partition p = Partition::parse(a.partition);
    const PartitionVerdict verdict = verify_sec_partition(g, p);

    Json out = graph_header(g);
    out["partition"] = p.to_string();
    out["verdict"] = verdict_to_json(verdict, p);
    out["is_c_partition"] = is_c_partition(g, p);

    std::string text = std::string("sec-partition: ") + (verdict.valid ? "valid" : "invalid") + "\n";
    for (std::size_t i = 0; i < verdict.parts.size(); ++i) {
        const PartVerdict& part = verdict.parts[i];
        text += "  part " + std::to_string(i) + " " + set_text(p[i]) + ": " +
                std::string(part_status_name(part.status));
        if (!part.partners.empty()) {
            text += " with";
            for (std::size_t j : part.partners) text += " " + std::to_string(j);
        }
        if (part.reason) text += " (" + std::string(invalid_reason_name(*part.reason)) + ")";
        if (part.own_certificate) text += " secure dominating by itself";
        for (const PairFailure& f : part.failures) {
            if (!f.union_certificate) continue;
            text += "\n    union with part " + std::to_string(f.partner) + " fails";
            if (f.union_certificate->witness) {
                text += " at vertex " + std::to_string(*f.union_certificate->witness) +
                        (f.union_certificate->dominating ? " (no defender)" : " (undominated)");
            }
        }
        text += "\n";
    }
    text += std::string("c-partition: ") + (out["is_c_partition"].get<bool>() ? "yes" : "no") + "\n";

    if (a.claim_scg) {
        const Graph claimed = resolve_graph_input(*a.claim_scg, kMaxVertexCap);
        const ScgClaimReport report = check_scg_claim(g, p, claimed);
        out["scg_claim"] = {{"claimed_graph6", write_graph6(claimed)},
                            {"claim_holds", report.claim_holds},
                            {"scg_graph6", report.scg ? Json(write_graph6(*report.scg)) : Json(nullptr)},
                            {"summary", report.summary}};
        text += "SCG claim: " + report.summary + "\n";
    } else if (verdict.valid) {
        const Graph scg = build_scg(g, p);
        out["scg_edges"] = write_edge_list(scg);
        text += "SCG: " + write_edge_list(scg) + "\n";
    }
    std::cout << (json ? out.dump(2) + "\n" : text);
    return verdict.valid ? kOk : kNotSecPartition;
}

int cmd_realize(const std::string& input, int cap, bool json)
{
    const Graph g = resolve_graph_input(input, kMaxVertexCap);
    const RealizeResult r = realize_as_scg(g, cap);
    if (json) {
        std::cout << Json::parse(realization_json(r, g)).dump(2) << "\n";
    } else {
        std::cout << "status: " << r.message << "\n";
        if (r.realization) {
            const Realization& z = *r.realization;
            std::cout << "construction: " << host_construction_name(z.construction) << "\n"
                      << "host: " << write_graph6(z.host) << " (n_H = " << z.host_order << ", m_H = " << z.host_size
                      << ")\n"
                      << "partition: " << z.partition.to_string() << "\n";
        }
    }
    switch (r.status) {
    case RealizeStatus::Verified: return kOk;
    case RealizeStatus::Unrealizable: return kUnrealizable;
    case RealizeStatus::ConstructionGap: return kInconsistent;
    }
    return kInconsistent;
}

struct SweepArgs {
    std::string corpus;
    std::string checks = "all";
    int jobs = 1;
    int cap = 7;
    int tree_cap = kDefaultTreeSearchCap;
    std::optional<std::string> out;
    std::optional<std::string> cache;
    std::size_t resample = 100;
};

int cmd_sweep(const SweepArgs& a, bool json)
{
    SweepOptions options;
    options.checks = SweepChecks::parse(a.checks);
    options.jobs = a.jobs;
    options.cap = a.cap;
    options.tree_cap = a.tree_cap;
    options.resample = a.resample;
    if (const char* env = std::getenv("SECOAL_CACHE"); env && *env) {
        options.cache = env;
    } else if (a.cache) {
        options.cache = *a.cache;
    }

    const auto corpus = load_corpus(a.corpus);
    const SweepResult result = run_sweep(corpus, options);
    Json summary = report_to_json(result.report);
    Json c5 = Json::array();
    for (const Finding& f : adjudicate_c5_scg_claims()) c5.push_back(finding_to_json(f));
    summary["c5_scg_claims"] = std::move(c5);

    if (a.out) {
        write_jsonl(*a.out, result.records);
        std::ofstream s(*a.out + ".summary.json", std::ios::trunc);
        if (!s) throw ParseError("cannot write summary next to '" + *a.out + "'");
        s << summary.dump(2) << "\n";
    } else if (!json) {
        for (const Json& r : result.records) std::cout << r.dump() << "\n";
    }

    if (json) {
        std::cout << summary.dump(2) << "\n";
    } else {
        const SweepReport& rep = result.report;
        std::cerr << rep.graphs << " graphs, " << rep.computed << " computed, " << rep.cache_hits
                  << " from cache (" << rep.resampled << " resampled, " << rep.resample_mismatches
                  << " mismatches), " << rep.errors << " errors, " << rep.seconds << " s\n";
        for (const auto& [name, t] : rep.totals) {
            std::cerr << "  " << name << ": " << t.pass << " pass, " << t.fail << " fail, " << t.not_applicable
                      << " n/a\n";
        }
        std::cerr << "  counterexamples: " << rep.counterexamples.size()
                  << ", informational findings: " << rep.informational_findings << "\n";
    }
    return result.report.resample_mismatches > 0 || result.report.errors > 0 ? kInconsistent : kOk;
}

int cmd_gen(const std::string& spec, const std::optional<std::string>& out, bool json)
{
    const auto graphs = generate_family_corpus(spec, kMaxVertexCap);
    if (out) write_graph6_file(*out, graphs);
    if (json) {
        Json j;
        j["spec"] = spec;
        j["count"] = graphs.size();
        Json lines = Json::array();
        for (const Graph& g : graphs) lines.push_back(write_graph6(g));
        j["graph6"] = std::move(lines);
        std::cout << j.dump(2) << "\n";
    } else if (!out) {
        for (const Graph& g : graphs) std::cout << write_graph6(g) << "\n";
    } else {
        std::cerr << "wrote " << graphs.size() << " graphs to " << *out << "\n";
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Secure domination and secure coalition toolkit"};
    app.set_version_flag("--version", std::string(secoal::tool_version()));
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "Machine-readable JSON output")->configurable(false);

    ComputeArgs compute;
    auto* c = app.add_subcommand("compute", "Compute gamma, gamma-s, sec, c or classify for one graph");
    c->add_option("what", compute.what, "gamma | gamma-s | sec | c | classify")
        ->required()
        ->check(CLI::IsMember({"gamma", "gamma-s", "sec", "c", "classify"}));
    c->add_option("--input,-i", compute.input, "graph6 line, edge-list file or family:n")->required();
    auto* cap_opt = c->add_option("--cap", compute.cap, "Largest order the exact search accepts");
    c->add_flag("--json", json);

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify", "Verify a candidate sec-partition");
    v->add_option("--input,-i", verify.input, "Graph")->required();
    v->add_option("--partition,-p", verify.partition, "Parts separated by ';', vertices by ','")->required();
    v->add_option("--claim-scg", verify.claim_scg, "Check SCG(G, partition) is isomorphic to this graph");
    v->add_flag("--json", json);

    std::string realize_input;
    int realize_cap = kDefaultVertexCap;
    auto* r = app.add_subcommand("realize", "Realize a graph as a secure coalition graph");
    r->add_option("--input,-i", realize_input, "Target graph")->required();
    r->add_option("--cap", realize_cap, "Largest host order")->check(CLI::Range(1, kMaxVertexCap));
    r->add_flag("--json", json);

    SweepArgs sweep;
    auto* s = app.add_subcommand("sweep", "Check every verdict over a corpus");
    s->add_option("--input,--corpus,-i", sweep.corpus, "graph6 file or trees:N, paths:N, ...")->required();
    s->add_option("--checks", sweep.checks, "Comma-separated groups or 'all'");
    s->add_option("--jobs,-j", sweep.jobs, "Worker threads")->check(CLI::PositiveNumber);
    s->add_option("--cap", sweep.cap, "Skip SEC and C above this order")->check(CLI::Range(1, 12));
    s->add_option("--tree-cap", sweep.tree_cap, "Order limit for trees")->check(CLI::Range(1, kTreeEnumerationCap));
    s->add_option("--out,-o", sweep.out, "JSONL output; the summary goes to <out>.summary.json");
    s->add_option("--cache", sweep.cache, "JSONL record cache (SECOAL_CACHE overrides)");
    s->add_option("--resample", sweep.resample, "Cached records re-computed per run");
    s->add_flag("--json", json);

    std::string gen_spec;
    std::optional<std::string> gen_out;
    auto* g = app.add_subcommand("gen", "Write a family corpus as graph6 lines");
    g->add_option("spec", gen_spec, "trees:N | paths:N | cycles:N | stars:N | completes:N")->required();
    g->add_option("--out,-o", gen_out, "Output file (default stdout)");
    g->add_flag("--json", json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*c) {
            compute.cap_given = cap_opt->count() > 0;
            return cmd_compute(compute, json);
        }
        if (*v) return cmd_verify(verify, json);
        if (*r) return cmd_realize(realize_input, realize_cap, json);
        if (*s) return cmd_sweep(sweep, json);
        if (*g) return cmd_gen(gen_spec, gen_out, json);
    } catch (const secoal::CapExceeded& e) {
        std::cerr << "secoal: " << e.what() << "\n";
        return kCap;
    } catch (const secoal::InternalInconsistency& e) {
        std::cerr << "secoal: internal inconsistency: " << e.what() << "\n";
        return kInconsistent;
    } catch (const secoal::Error& e) {
        std::cerr << "secoal: " << e.what() << "\n";
        return kUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "secoal: bad JSON: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
