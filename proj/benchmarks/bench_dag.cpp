#include <benchmark/benchmark.h>

#include "tracking/dag.hpp"
#include "tracking/generate.hpp"

using namespace tracking;

static void BM_CountPathsDiamonds(benchmark::State& state) {
    auto d = gen::serial_diamonds_dag(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(count_paths(d));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CountPathsDiamonds)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

static void BM_CountPathsSaturating(benchmark::State& state) {
    auto d = gen::serial_diamonds_dag(state.range(0));
    const BigCount cap = 17;
    for (auto _ : state) benchmark::DoNotOptimize(count_paths(d, cap));
}
BENCHMARK(BM_CountPathsSaturating)->RangeMultiplier(4)->Range(16, 1024);

static void BM_ReduceDag(benchmark::State& state) {
    gen::Rng rng(1);
    auto d = gen::random_st_dag(rng, state.range(0), 2.0 / state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(reduce_dag(d));
}
BENCHMARK(BM_ReduceDag)->RangeMultiplier(4)->Range(64, 4096);

static void BM_VerifierTrackingSet(benchmark::State& state) {
    // one middle vertex per diamond tracks every path, so no early exit
    const auto c = static_cast<std::size_t>(state.range(0));
    auto d = gen::serial_diamonds_dag(c);
    TrackingVerifier verifier(d);
    std::vector<Vertex> trackers;
    for (std::size_t i = 0; i < c; ++i) trackers.push_back(static_cast<Vertex>(3 * i + 1));
    for (auto _ : state) benchmark::DoNotOptimize(verifier.check(trackers));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_VerifierTrackingSet)->RangeMultiplier(4)->Range(4, 256)->Complexity();

static void BM_VerifierRejects(benchmark::State& state) {
    gen::Rng rng(2);
    auto d = gen::random_reduced_dag(rng, 120, 0.01);
    TrackingVerifier verifier(d);
    std::vector<Vertex> trackers{1, 2};
    for (auto _ : state) benchmark::DoNotOptimize(verifier.check(trackers));
    state.counters["n"] = static_cast<double>(d.vertex_count());
}
BENCHMARK(BM_VerifierRejects);

static void BM_SolveLadderFullScan(benchmark::State& state) {
    auto d = gen::ladder_dag(14);
    DagSolveOptions opt;
    opt.threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(solve_dag(d, 4, opt));
}
BENCHMARK(BM_SolveLadderFullScan)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
