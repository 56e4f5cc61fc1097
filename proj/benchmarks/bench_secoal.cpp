#include <benchmark/benchmark.h>

#include "secoal/coalition.hpp"
#include "secoal/domination.hpp"
#include "secoal/graph.hpp"
#include "secoal/scg.hpp"
#include "secoal/trees.hpp"

namespace {

using namespace secoal;

void BM_SecNumberPath(benchmark::State& state)
{
    const Graph g = generate(Family::Path, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(sec_number(g, {.cap = 10}).count);
}
BENCHMARK(BM_SecNumberPath)->DenseRange(5, 9)->Unit(benchmark::kMillisecond);

void BM_SecNumberNoBound(benchmark::State& state)
{
    const Graph g = generate(Family::Cycle, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sec_number(g, {.cap = 10, .use_secure_domination_bound = false}).count);
    }
}
BENCHMARK(BM_SecNumberNoBound)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

void BM_CoalitionNumber(benchmark::State& state)
{
    const Graph g = generate(Family::Cycle, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(coalition_number(g, {.cap = 10}).count);
}
BENCHMARK(BM_CoalitionNumber)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

void BM_SecureDominationNumber(benchmark::State& state)
{
    const Graph g = generate(Family::Cycle, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(secure_domination_number(g).count);
}
BENCHMARK(BM_SecureDominationNumber)->RangeMultiplier(2)->Range(8, 24);

void BM_EnumerateTrees(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_trees(n).size());
}
BENCHMARK(BM_EnumerateTrees)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);

void BM_RealizeComplement(benchmark::State& state)
{
    const Graph g = complement(generate(Family::Path, static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(realize_as_scg(g, kMaxVertexCap).status);
}
BENCHMARK(BM_RealizeComplement)->DenseRange(4, 7);

}  // namespace

BENCHMARK_MAIN();
