#include "hurwitz/free_energy.hpp"
#include "hurwitz/hurwitz.hpp"
#include "hurwitz/operators.hpp"
#include "hurwitz/oracle.hpp"
#include "hurwitz/partition.hpp"

#include <benchmark/benchmark.h>

using namespace hurwitz;

static void BM_CharacterTable(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto t = CharacterTable::build(d);
        benchmark::DoNotOptimize(t);
    }
}

static void BM_HeatTable(benchmark::State& state) {
    const int h = static_cast<int>(state.range(0));
    const int d = static_cast<int>(state.range(1));
    for (auto _ : state) {
        auto t = HurwitzTable::build(BaseCurve{h}, d, d);
        benchmark::DoNotOptimize(t);
    }
}

static void BM_OracleCensus(benchmark::State& state) {
    const int h = static_cast<int>(state.range(0));
    const int r = static_cast<int>(state.range(1));
    for (auto _ : state) {
        auto c = oracle::census(h, 4, r);
        benchmark::DoNotOptimize(c);
    }
    state.counters["steps"] = static_cast<double>(oracle::estimated_steps(h, 4, r));
}

static void BM_FreeEnergyPde(benchmark::State& state) {
    const int c = static_cast<int>(state.range(0));
    for (auto _ : state) {
        FreeEnergyFamily family = FreeEnergyFamily::for_complexity(BaseCurve{1}, c);
        bool ok = true;
        for (int g = 0; 2 * g <= c + 1; ++g)
            ok = ok && verify_pde(family, g, c + 2 - 2 * g).holds;
        benchmark::DoNotOptimize(ok);
    }
}

static void BM_QuantumCurve(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto check = verify_PZ(BaseCurve{2}, m);
        benchmark::DoNotOptimize(check);
    }
}

BENCHMARK(BM_CharacterTable)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HeatTable)->Args({0, 6})->Args({1, 6})->Args({2, 6})->Args({1, 8})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleCensus)->Args({0, 6})->Args({1, 4})->Args({2, 2})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FreeEnergyPde)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QuantumCurve)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
