#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <map>

#include "secoal/errors.hpp"
#include "secoal/graph_io.hpp"
#include "secoal/sweep.hpp"
#include "support.hpp"

using namespace secoal;
namespace fs = std::filesystem;

namespace {

std::vector<CorpusEntry> corpus_up_to(int n)
{
    std::vector<CorpusEntry> out;
    for (int k = 1; k <= n; ++k) {
        for (auto& e : read_graph6_file(testing_support::data_path("graphs_n" + std::to_string(k) + ".g6"))) {
            out.push_back(std::move(e));
        }
    }
    return out;
}

class TempDir {
public:
    TempDir()
    {
        path_ = fs::temp_directory_path() /
                ("secoal_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
                 ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::remove_all(path_);
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    fs::path operator/(const std::string& name) const { return path_ / name; }

private:
    fs::path path_;
};

std::vector<std::string> read_lines(const fs::path& p)
{
    std::ifstream in(p);
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return lines;
}

void write_lines(const fs::path& p, const std::vector<std::string>& lines)
{
    std::ofstream out(p, std::ios::trunc);
    for (const auto& l : lines) out << l << '\n';
}

}  // namespace

TEST(SweepChecks, Parse)
{
    EXPECT_EQ(SweepChecks::parse("all").to_string(), SweepChecks::all().to_string());
    const auto some = SweepChecks::parse("sec,realize");
    EXPECT_TRUE(some.sec);
    EXPECT_TRUE(some.realize);
    EXPECT_FALSE(some.c);
    EXPECT_FALSE(some.trees);
    EXPECT_EQ(SweepChecks::parse(some.to_string()).to_string(), some.to_string());
    EXPECT_THROW(SweepChecks::parse("sec,bogus"), ParseError);
}

TEST(SweepRecord, FieldsForPathOfSix)
{
    const SweepRecord r = compute_record(generate(Family::Path, 6), SweepOptions{});
    EXPECT_EQ(r.n, 6);
    EXPECT_EQ(r.m, 5);
    EXPECT_EQ(r.gamma, 2);
    EXPECT_EQ(r.gamma_s, 3);
    EXPECT_EQ(r.sec, 4);
    ASSERT_TRUE(r.sec_witness.has_value());
    EXPECT_EQ(r.sec_witness->to_string(), "0,1,4;2;3;5");
    EXPECT_EQ(r.verdicts.size(), kVerdictNames.size());
    EXPECT_EQ(r.verdict("thm2_5"), true);
    EXPECT_EQ(r.verdict("thm3_5"), true);
    EXPECT_EQ(r.verdict("thm4_2_roundtrip"), true);
    EXPECT_EQ(r.verdict("thm3_2"), std::nullopt);  // connected

    const Json j = record_to_json(r);
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    EXPECT_EQ(keys, (std::vector<std::string>{"graph6", "n", "m", "delta", "Delta", "gamma", "gamma_s", "sec", "c",
                                              "sec_witness", "family_labels", "bound_verdicts", "findings", "skipped"}));
}

TEST(SweepRecord, LargeGraphsAreSkippedAboveCap)
{
    const SweepRecord r = compute_record(generate(Family::Cycle, 9), SweepOptions{});
    EXPECT_FALSE(r.sec.has_value());
    EXPECT_FALSE(r.skipped.empty());
    const SweepRecord tree = compute_record(generate(Family::Path, 9), SweepOptions{});
    EXPECT_EQ(tree.sec, 6);
}

TEST(SweepRecord, EveryFalseVerdictHasAReplayableFinding)
{
    const auto corpus = corpus_up_to(6);
    for (const auto& e : corpus) {
        const SweepRecord r = compute_record(e.graph, SweepOptions{});
        for (const auto& [name, value] : r.verdicts) {
            if (value != false) continue;
            bool found = false;
            for (const Finding& f : r.findings) {
                if (f.check != name) continue;
                found = true;
                EXPECT_TRUE(replay_finding(e.graph, f)) << e.graph6 << " " << name;
            }
            EXPECT_TRUE(found) << e.graph6 << " " << name;
        }
        for (const Finding& f : r.findings) {
            EXPECT_TRUE(replay_finding(e.graph, finding_from_json(finding_to_json(f)))) << e.graph6 << " " << f.check;
        }
    }
}

TEST(Sweep, TotalsSumToCorpusSize)
{
    const auto corpus = corpus_up_to(5);
    const auto result = run_sweep(corpus, SweepOptions{});
    EXPECT_EQ(result.records.size(), corpus.size());
    EXPECT_EQ(result.report.errors, 0u);
    for (const auto& [name, t] : result.report.totals) {
        EXPECT_EQ(t.pass + t.fail + t.not_applicable, corpus.size()) << name;
    }
    const Json summary = report_to_json(result.report);
    EXPECT_EQ(summary["graphs"], corpus.size());
    EXPECT_EQ(summary["corpus_digest"].get<std::string>().size(), 64u);
}

TEST(Sweep, RecordsDoNotDependOnJobs)
{
    const auto corpus = corpus_up_to(6);
    SweepOptions one;
    SweepOptions four;
    four.jobs = 4;
    const auto a = run_sweep(corpus, one);
    const auto b = run_sweep(corpus, four);
    ASSERT_EQ(a.records.size(), b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) EXPECT_EQ(a.records[i].dump(), b.records[i].dump());
    EXPECT_EQ(a.report.corpus_digest, b.report.corpus_digest);
    EXPECT_THROW(run_sweep(corpus, SweepOptions{.jobs = 0}), InvalidArgument);
}

TEST(Sweep, CacheHitsAndResampling)
{
    TempDir dir;
    const auto corpus = corpus_up_to(5);
    SweepOptions options;
    options.cache = dir / "cache.jsonl";
    options.resample = 10;
    const auto first = run_sweep(corpus, options);
    EXPECT_EQ(first.report.cache_hits, 0u);
    EXPECT_EQ(first.report.computed, corpus.size());
    EXPECT_EQ(read_lines(*options.cache).size(), corpus.size());

    const auto second = run_sweep(corpus, options);
    EXPECT_EQ(second.report.cache_hits, corpus.size());
    EXPECT_EQ(second.report.computed, 0u);
    EXPECT_EQ(second.report.resampled, 10u);
    EXPECT_EQ(second.report.resample_mismatches, 0u);
    for (std::size_t i = 0; i < corpus.size(); ++i) EXPECT_EQ(first.records[i], second.records[i]);
    EXPECT_EQ(read_lines(*options.cache).size(), corpus.size());

    // Different options never reuse records.
    SweepOptions other = options;
    other.checks = SweepChecks::parse("sec");
    EXPECT_EQ(run_sweep(corpus, other).report.cache_hits, 0u);
}

TEST(Sweep, TamperedCacheIsDetected)
{
    TempDir dir;
    const auto corpus = corpus_up_to(4);
    SweepOptions options;
    options.cache = dir / "cache.jsonl";
    const auto clean = run_sweep(corpus, options);

    auto lines = read_lines(*options.cache);
    Json entry = Json::parse(lines[5]);
    entry["record"]["sec"] = entry["record"]["sec"].get<int>() + 1;
    lines[5] = entry.dump();
    write_lines(*options.cache, lines);

    const auto again = run_sweep(corpus, options);
    EXPECT_EQ(again.report.resample_mismatches, 1u);
    EXPECT_EQ(again.records[5], clean.records[5]);
    // The cache was rewritten with the fresh record.
    const auto third = run_sweep(corpus, options);
    EXPECT_EQ(third.report.resample_mismatches, 0u);
}

TEST(Sweep, VersionMismatchInvalidatesCache)
{
    TempDir dir;
    const auto corpus = corpus_up_to(3);
    SweepOptions options;
    options.cache = dir / "cache.jsonl";
    run_sweep(corpus, options);

    auto lines = read_lines(*options.cache);
    Json entry = Json::parse(lines[0]);
    entry["cache_version"] = "secoal-cache/0";
    lines[0] = entry.dump();
    write_lines(*options.cache, lines);

    const auto again = run_sweep(corpus, options);
    EXPECT_TRUE(again.report.cache_invalidated);
    EXPECT_EQ(again.report.cache_hits, 0u);
    EXPECT_EQ(again.report.computed, corpus.size());
    const auto third = run_sweep(corpus, options);
    EXPECT_FALSE(third.report.cache_invalidated);
    EXPECT_EQ(third.report.cache_hits, corpus.size());

    write_lines(*options.cache, {"not json"});
    EXPECT_TRUE(run_sweep(corpus, options).report.cache_invalidated);
}

TEST(Sweep, JsonlOutputIsDeterministic)
{
    TempDir dir;
    const auto corpus = corpus_up_to(5);
    write_jsonl(dir / "a.jsonl", run_sweep(corpus, SweepOptions{}).records);
    write_jsonl(dir / "b.jsonl", run_sweep(corpus, SweepOptions{.jobs = 3}).records);
    EXPECT_EQ(read_lines(dir / "a.jsonl"), read_lines(dir / "b.jsonl"));
}

TEST(Witness, ReplayRejectsTamperedWitnesses)
{
    const Graph g = parse_graph6("EOkW");
    const SweepRecord r = compute_record(g, SweepOptions{});
    ASSERT_EQ(r.verdict("remark_sec_le_c"), false);
    const Finding* finding = nullptr;
    for (const Finding& f : r.findings) {
        if (f.check == "remark_sec_le_c") finding = &f;
    }
    ASSERT_NE(finding, nullptr);
    EXPECT_TRUE(replay_finding(g, *finding));

    Finding tampered = *finding;
    for (auto& w : tampered.witnesses) {
        if (w.contains("count")) w["count"] = w["count"].get<int>() + 1;
    }
    EXPECT_FALSE(replay_finding(g, tampered));
    EXPECT_FALSE(replay_finding(g, Finding{.check = "x", .message = "no witnesses"}));
    EXPECT_FALSE(replay_witness(g, Json{{"kind", "unknown"}}));

    const Json set_witness{{"kind", "secure_set"}, {"set", Json::array({0, 1, 2, 3, 4, 5})}, {"expect_secure", true}};
    EXPECT_TRUE(replay_witness(g, set_witness));
    Json wrong = set_witness;
    wrong["expect_secure"] = false;
    EXPECT_FALSE(replay_witness(g, wrong));
}

TEST(Witness, SweepFindsKnownDiscrepancies)
{
    const auto result = run_sweep(corpus_up_to(6), SweepOptions{});
    std::map<std::string, int> fails;
    for (const auto& [name, t] : result.report.totals) fails[name] = static_cast<int>(t.fail);
    EXPECT_EQ(fails["remark_sec_le_c"], 4);
    EXPECT_EQ(fails["thm3_1"], 2);
    for (const auto& [name, count] : fails) {
        if (name == "remark_sec_le_c" || name == "thm3_1") continue;
        EXPECT_EQ(count, 0) << name;
    }
}

TEST(Corpus, FamilySpecs)
{
    EXPECT_EQ(generate_family_corpus("paths:4").size(), 4u);
    EXPECT_EQ(generate_family_corpus("completes:3").size(), 3u);
    EXPECT_EQ(generate_family_corpus("cycles:5").size(), 3u);
    const auto trees = generate_family_corpus("trees:5");
    EXPECT_EQ(trees.size(), 8u);
    int order5 = 0;
    for (const Graph& t : trees) order5 += t.order() == 5 ? 1 : 0;
    EXPECT_EQ(order5, 3);
    EXPECT_TRUE(is_family_corpus_spec("stars:3"));
    EXPECT_FALSE(is_family_corpus_spec("wheels:3"));
    EXPECT_THROW(generate_family_corpus("trees:11"), CapExceeded);
}

TEST(Corpus, ParseLinesAndInputs)
{
    const auto entries = parse_graph6_lines("# header\n@\n\nA_\n");
    ASSERT_EQ(entries.size(), 2u);
    EXPECT_EQ(entries[1].graph, generate(Family::Complete, 2));
    EXPECT_THROW(parse_graph6_lines("@\n!!bad\n"), ParseError);
    EXPECT_EQ(resolve_graph_input("path:6"), generate(Family::Path, 6));
    EXPECT_EQ(resolve_graph_input("3 0 1"), parse_edge_list("3 0 1"));
    EXPECT_EQ(resolve_graph_input("A_"), generate(Family::Complete, 2));
    EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
