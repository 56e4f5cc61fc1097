#include <gtest/gtest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "support.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CliRun {
    int code = -1;
    std::string out;
};

// Runs the CLI through the shell; stderr is discarded unless redirected in `args`.
CliRun run_cli(const std::string& args, const std::string& env = "")
{
    const std::string cmd = env + " " + SECOAL_CLI_PATH + " " + args + (args.find("2>") == std::string::npos ? " 2>/dev/null" : "");
    CliRun r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t got = 0;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = ::pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

fs::path scratch(const std::string& name)
{
    const fs::path dir = fs::temp_directory_path() / "secoal_cli_test";
    fs::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST(Cli, ComputeSecOnPathOfSix)
{
    const CliRun r = run_cli("compute sec --input path:6 --json");
    ASSERT_EQ(r.code, 0);
    const json j = json::parse(r.out);
    EXPECT_EQ(j["sec"], 4);
    EXPECT_EQ(j["witness"].size(), 4u);
    EXPECT_EQ(run_cli("compute sec --input cycle:4").out.substr(0, 7), "SEC = 4");
    EXPECT_EQ(json::parse(run_cli("compute sec --input star:5 --json").out)["sec"], 3);
}

TEST(Cli, ComputeOtherQuantities)
{
    EXPECT_EQ(json::parse(run_cli("compute gamma --input cycle:5 --json").out)["gamma"], 2);
    EXPECT_EQ(json::parse(run_cli("compute gamma-s --input path:3 --json").out)["gamma_s"], 2);
    EXPECT_EQ(json::parse(run_cli("compute c --input complete:4 --json").out)["c"], 4);
    const json cls = json::parse(run_cli("compute classify --input path:5 --json").out);
    EXPECT_EQ(cls["predict_sec_equals_n"], false);
    EXPECT_EQ(cls["tree"]["sec"], 4);
}

TEST(Cli, ExitCodes)
{
    EXPECT_EQ(run_cli("compute sec --input path:12").code, 2);
    EXPECT_EQ(run_cli("compute sec --input cycle:10").code, 2);
    EXPECT_EQ(run_cli("compute sec --input cycle:10 --cap 10").code, 0);
    EXPECT_EQ(run_cli("compute sec --input 'D?'").code, 1);
    EXPECT_EQ(run_cli("compute nonsense --input path:3").code, 1);
    EXPECT_EQ(run_cli("frobnicate").code, 1);
    EXPECT_EQ(run_cli("gen trees:11").code, 2);
}

TEST(Cli, Verify)
{
    const CliRun ok = run_cli("verify --input path:6 --partition '0,2;3,5;4;1'");
    EXPECT_EQ(ok.code, 0);
    EXPECT_NE(ok.out.find("sec-partition: valid"), std::string::npos);

    const CliRun bad = run_cli("verify --input path:6 --partition '0,5;1;2;3;4' --json");
    EXPECT_EQ(bad.code, 5);
    const json j = json::parse(bad.out);
    EXPECT_EQ(j["verdict"]["valid"], false);
    EXPECT_EQ(j["is_c_partition"], true);

    const CliRun k3 = run_cli("verify --input complete:3 --partition '0;1;2'");
    EXPECT_EQ(k3.code, 0);
    EXPECT_NE(k3.out.find("full_degree_singleton"), std::string::npos) << k3.out;

    EXPECT_EQ(run_cli("verify --input path:6 --partition '0;1'").code, 1);
    EXPECT_EQ(run_cli("verify --input path:6 --partition '0;;1'").code, 1);
}

TEST(Cli, VerifyScgClaim)
{
    const CliRun r = run_cli("verify --input cycle:5 --partition '0,4;2;1;3' --claim-scg star:4 --json");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(json::parse(r.out)["scg_claim"]["claim_holds"], true);
}

TEST(Cli, Realize)
{
    const CliRun p3 = run_cli("realize --input path:3 --json");
    ASSERT_EQ(p3.code, 0);
    const json j = json::parse(p3.out);
    EXPECT_EQ(j["n_H"], 7);
    EXPECT_EQ(j["verified"], true);

    EXPECT_EQ(run_cli("realize --input '3 1 2'").code, 4);
    const CliRun k2 = run_cli("realize --input complete:2");
    EXPECT_EQ(k2.code, 0);
    EXPECT_NE(k2.out.find("k2-edgeless-host"), std::string::npos);

    const fs::path file = scratch("k1k2.txt");
    std::ofstream(file) << "3\n1 2\n";
    EXPECT_EQ(run_cli("realize --input " + file.string()).code, 4);
}

TEST(Cli, Gen)
{
    const CliRun paths = run_cli("gen paths:4");
    EXPECT_EQ(paths.code, 0);
    EXPECT_EQ(std::count(paths.out.begin(), paths.out.end(), '\n'), 4);
    EXPECT_EQ(json::parse(run_cli("gen completes:3 --json").out)["count"], 3);
    const fs::path out = scratch("trees.g6");
    EXPECT_EQ(run_cli("gen trees:6 --out " + out.string()).code, 0);
    std::ifstream in(out);
    int lines = 0;
    for (std::string line; std::getline(in, line);) ++lines;
    EXPECT_EQ(lines, 1 + 1 + 1 + 2 + 3 + 6);
}

TEST(Cli, SweepWritesRecordsSummaryAndCache)
{
    const fs::path out = scratch("sweep.jsonl");
    const fs::path cache = scratch("cache.jsonl");
    const fs::path env_cache = scratch("env_cache.jsonl");
    fs::remove(cache);
    fs::remove(env_cache);
    const std::string corpus = testing_support::data_path("graphs_n4.g6").string();

    const CliRun first = run_cli("sweep --input " + corpus + " --out " + out.string() + " --cache " + cache.string() +
                             " --jobs 2");
    ASSERT_EQ(first.code, 0);
    std::ifstream records(out);
    int lines = 0;
    for (std::string line; std::getline(records, line);) {
        EXPECT_TRUE(json::parse(line).contains("bound_verdicts"));
        ++lines;
    }
    EXPECT_EQ(lines, 11);
    const json summary = json::parse(std::ifstream(out.string() + ".summary.json"));
    EXPECT_EQ(summary["graphs"], 11);
    EXPECT_EQ(summary["c5_scg_claims"].size(), 2u);
    EXPECT_TRUE(fs::exists(cache));

    const json again = json::parse(run_cli("sweep --input " + corpus + " --cache " + cache.string() + " --json").out);
    EXPECT_EQ(again["cache"]["hits"], 11);
    EXPECT_EQ(again["cache"]["resample_mismatches"], 0);

    const json env = json::parse(
        run_cli("sweep --input " + corpus + " --cache " + cache.string() + " --json", "SECOAL_CACHE=" + env_cache.string())
            .out);
    EXPECT_EQ(env["cache"]["hits"], 0);
    EXPECT_TRUE(fs::exists(env_cache));

    const json trees = json::parse(run_cli("sweep --input trees:6 --checks sec,trees --json").out);
    EXPECT_EQ(trees["graphs"], 14);
    EXPECT_EQ(run_cli("sweep --input /nonexistent/corpus.g6").code, 1);
}
