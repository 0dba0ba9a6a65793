#include <benchmark/benchmark.h>

#include "primelab/counting.hpp"
#include "primelab/elementary.hpp"
#include "primelab/sieve.hpp"

using namespace primelab;

static void BM_PrimeCount(benchmark::State& state) {
    const auto x = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(prime_count(x));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PrimeCount)->RangeMultiplier(10)->Range(1'000'000, 100'000'000)->Unit(benchmark::kMillisecond);

static void BM_PrimeCountSegment(benchmark::State& state) {
    SieveConfig cfg;
    cfg.segment_bytes = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(prime_count(10'000'000, cfg));
}
BENCHMARK(BM_PrimeCountSegment)->RangeMultiplier(4)->Range(1 << 12, 1 << 22)->Unit(benchmark::kMillisecond);

static void BM_PrimeCountThreads(benchmark::State& state) {
    SieveConfig cfg;
    cfg.threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(prime_count(100'000'000, cfg));
}
BENCHMARK(BM_PrimeCountThreads)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_MobiusRange(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(mobius_range(1, n));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MobiusRange)->Arg(1'000'000)->Arg(10'000'000)->Unit(benchmark::kMillisecond);

static void BM_Factorize(benchmark::State& state) {
    std::uint64_t n = 999'999'999'989;
    for (auto _ : state) benchmark::DoNotOptimize(factorize(n));
}
BENCHMARK(BM_Factorize);

static void BM_CountSnapshot(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(count_snapshot(static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_CountSnapshot)->Arg(1'000'000)->Arg(10'000'000)->Unit(benchmark::kMillisecond);

static void BM_Li(benchmark::State& state) {
    double x = 1e9;
    for (auto _ : state) benchmark::DoNotOptimize(li(x));
}
BENCHMARK(BM_Li);

static void BM_Selberg(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(selberg_error(static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_Selberg)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);
