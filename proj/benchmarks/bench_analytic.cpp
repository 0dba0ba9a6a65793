#include <benchmark/benchmark.h>

#include "primelab/characters.hpp"
#include "primelab/multiplicative.hpp"
#include "primelab/progressions.hpp"
#include "primelab/zeta.hpp"

using namespace primelab;

static void BM_CharacterTable(benchmark::State& state) {
    const auto q = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(CharacterTable(q).size());
}
BENCHMARK(BM_CharacterTable)->Arg(101)->Arg(1000)->Arg(65536)->Arg(99991);

static void BM_ZetaEval(benchmark::State& state) {
    const auto terms = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(zeta_eval({1.5, 10.0}, terms));
}
BENCHMARK(BM_ZetaEval)->Arg(10'000)->Arg(1'000'000)->Unit(benchmark::kMicrosecond);

static void BM_Perron(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(perron_indicator(10.0, 1.5, double(state.range(0))));
}
BENCHMARK(BM_Perron)->Arg(100)->Arg(400)->Unit(benchmark::kMicrosecond);

static void BM_Goldbach(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(goldbach_check(n));
}
BENCHMARK(BM_Goldbach)->Arg(10'000)->Arg(1'000'000)->Unit(benchmark::kMicrosecond);

static void BM_Distance(benchmark::State& state) {
    const auto f = MultiplicativeFunction::random_unimodular(1);
    const auto g = MultiplicativeFunction::nit(0.5);
    const auto x = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(distance(f, g, x));
}
BENCHMARK(BM_Distance)->Arg(100'000)->Arg(10'000'000)->Unit(benchmark::kMicrosecond);

static void BM_Halasz(benchmark::State& state) {
    const auto mu = MultiplicativeFunction::mobius();
    for (auto _ : state) benchmark::DoNotOptimize(halasz_ratio(mu, 10'000, 0.0, 1'000'000));
}
BENCHMARK(BM_Halasz)->Unit(benchmark::kMillisecond);

static void BM_Equidist(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(equidist_stats(101, 1000));
}
BENCHMARK(BM_Equidist)->Unit(benchmark::kMillisecond);

static void BM_ExplicitPsi(benchmark::State& state) {
    const auto zeros = load_zeros(PRIMELAB_ZEROS_FILE);
    for (auto _ : state) benchmark::DoNotOptimize(explicit_psi(1e4, zeros));
}
BENCHMARK(BM_ExplicitPsi)->Unit(benchmark::kMicrosecond);
