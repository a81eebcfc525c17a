#include <benchmark/benchmark.h>

#include "tracking/generate.hpp"
#include "tracking/set_system.hpp"

using namespace tracking;

namespace {

SetSystem instance(std::size_t universe, std::size_t m) {
    gen::Rng rng(universe * 131 + m);
    return gen::random_set_system(rng, universe, m, 0.5);
}

}  // namespace

static void BM_HittingRoute(benchmark::State& state) {
    auto sys = instance(state.range(0), state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(solve_tracking_set(sys, 6));
}
BENCHMARK(BM_HittingRoute)->Args({12, 8})->Args({16, 16})->Args({24, 32})->Args({32, 64})->Unit(benchmark::kMillisecond);

static void BM_SubsetRoute(benchmark::State& state) {
    auto sys = instance(state.range(0), state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(solve_tracking_set_by_subsets(sys, 6));
}
BENCHMARK(BM_SubsetRoute)->Args({12, 8})->Args({16, 16})->Args({24, 32})->Unit(benchmark::kMillisecond);

static void BM_ReduceToHitting(benchmark::State& state) {
    auto sys = instance(32, state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(reduce_to_hitting(sys));
}
BENCHMARK(BM_ReduceToHitting)->RangeMultiplier(2)->Range(8, 64);
