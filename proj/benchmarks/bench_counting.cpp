#include <benchmark/benchmark.h>

#include "fibrep/fibrep.hpp"

// Counting routes side by side.  The exhaustive walk is exponential in
// the length, the pruned DP roughly quadratic, the recurrence linear;
// the ranges below keep each within a sensible wall-clock budget.

static void BruteCount(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto count = fibrep::count_brute(0, k);
        benchmark::DoNotOptimize(count);
    }
    state.SetComplexityN(k);
}
BENCHMARK(BruteCount)->DenseRange(6, 16, 2)->Complexity();

static void PrunedCount(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto count = fibrep::count_pruned(0, k);
        benchmark::DoNotOptimize(count);
    }
    state.SetComplexityN(k);
}
BENCHMARK(PrunedCount)->RangeMultiplier(2)->Range(8, 64)->Complexity();

static void PrunedCountOffZero(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto count = fibrep::count_pruned(987654321, k);
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(PrunedCountOffZero)->RangeMultiplier(2)->Range(8, 64);

static void RecurrenceStream(benchmark::State& state) {
    const int terms = static_cast<int>(state.range(0));
    for (auto _ : state) {
        fibrep::ZeroSequence seq;
        fibrep::BigInt last;
        for (int k = 1; k <= terms; ++k) last = seq.next();
        benchmark::DoNotOptimize(last);
    }
    state.SetComplexityN(terms);
}
BENCHMARK(RecurrenceStream)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

static void CorrectedStream(benchmark::State& state) {
    const int terms = static_cast<int>(state.range(0));
    for (auto _ : state) {
        fibrep::CountSequence seq(5);
        fibrep::BigInt last;
        for (int k = 1; k <= terms; ++k) last = seq.next().value;
        benchmark::DoNotOptimize(last);
    }
}
BENCHMARK(CorrectedStream)->RangeMultiplier(4)->Range(16, 1024);

static void EnumerateZero(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto reps = fibrep::enumerate_representations(0, k);
        benchmark::DoNotOptimize(reps);
    }
}
BENCHMARK(EnumerateZero)->DenseRange(6, 14, 2);

static void CorrectionLimitCold(benchmark::State& state) {
    // Vary the target each pass so the limit cache never serves a hit.
    long long n = 1000000;
    for (auto _ : state) {
        auto limit = fibrep::correction_limit(n++);
        benchmark::DoNotOptimize(limit);
    }
}
BENCHMARK(CorrectionLimitCold);

int main(int argc, char** argv) {
    ::benchmark::Initialize(&argc, argv);
    if (::benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    ::benchmark::RunSpecifiedBenchmarks();
    ::benchmark::Shutdown();
    return 0;
}
