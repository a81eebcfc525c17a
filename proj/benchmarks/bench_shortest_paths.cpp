#include <benchmark/benchmark.h>

#include "tracking/generate.hpp"
#include "tracking/shortest_paths.hpp"

using namespace tracking;

static void BM_Rule1(benchmark::State& state) {
    gen::Rng rng(3);
    auto g = gen::random_connected_graph(rng, state.range(0), 4.0 / state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(reduce_rule_1(g));
}
BENCHMARK(BM_Rule1)->RangeMultiplier(4)->Range(64, 4096);

static void BM_EnumerateDiamonds(benchmark::State& state) {
    auto lg = reduce_rule_1(gen::serial_diamonds(state.range(0)))->layered;
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_shortest_paths(lg, 1u << 20));
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << state.range(0)));
}
BENCHMARK(BM_EnumerateDiamonds)->DenseRange(4, 12, 4);

static void BM_SolveLayered(benchmark::State& state) {
    gen::Rng rng(4);
    auto g = gen::random_layered_graph(rng, state.range(0), 3, 0.2);
    for (auto _ : state) benchmark::DoNotOptimize(solve_shortest_paths(g, 4));
}
BENCHMARK(BM_SolveLayered)->DenseRange(2, 8, 2);
