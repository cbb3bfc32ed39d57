#include <benchmark/benchmark.h>

#include "qcomb/fm_sketch.hpp"
#include "qcomb/level_seq.hpp"
#include "qcomb/morris.hpp"
#include "qcomb/series.hpp"
#include "qcomb/strahler.hpp"

using namespace qcomb;

static void BM_SeriesMultiply(benchmark::State& state) {
    const int ord = static_cast<int>(state.range(0));
    Series a = Series::constant(Rat(1), ord), b = Series::constant(Rat(1), ord);
    for (int i = 1; i <= ord; ++i) {
        a.set(i, Rat(i, i + 1));
        b.set(i, Rat(-1, 2 * i + 1));
    }
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_SeriesMultiply)->Arg(32)->Arg(64);

static void BM_CounterPmf(benchmark::State& state) {
    const long n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(morris::pmf_dp(n));
}
BENCHMARK(BM_CounterPmf)->Arg(16)->Arg(32)->Arg(64);

static void BM_SketchPowerSums(benchmark::State& state) {
    const long n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(fm::q_exact_row(n, 10));
}
BENCHMARK(BM_SketchPowerSums)->Arg(32)->Arg(64);

static void BM_SketchMeanWindowed(benchmark::State& state) {
    const long n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(fm::mean_R(n, 1e-9));
}
BENCHMARK(BM_SketchMeanWindowed)->Arg(1024)->Arg(4096);

static void BM_LevelSequenceCount(benchmark::State& state) {
    const long n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(levels::count_dp(n));
}
BENCHMARK(BM_LevelSequenceCount)->Arg(20)->Arg(40);

static void BM_RegisterCount(benchmark::State& state) {
    const long n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(strahler::count_register(n, 2));
}
BENCHMARK(BM_RegisterCount)->Arg(64)->Arg(256);

static void BM_CounterSimulate(benchmark::State& state) {
    const long trials = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(morris::simulate(100, trials, 42, 1));
    state.SetItemsProcessed(state.iterations() * trials);
}
BENCHMARK(BM_CounterSimulate)->Arg(1000)->Arg(10000);

BENCHMARK_MAIN();
