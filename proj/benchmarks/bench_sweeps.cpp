#include <benchmark/benchmark.h>

#include "twistlab/aptables.hpp"
#include "twistlab/density.hpp"
#include "twistlab/stats.hpp"

namespace tl = twistlab;

static void ClassPass(benchmark::State& state) {
    tl::i64 p = state.range(0);
    for (auto _ : state) {
        auto cd = tl::stats::class_pass(p);
        benchmark::DoNotOptimize(cd.roots.data());
    }
    state.SetComplexityN(p);
}
BENCHMARK(ClassPass)->Arg(499)->Arg(4001)->Arg(40009)->Complexity();

static void ApRangeCold(benchmark::State& state) {
    tl::i64 pmax = state.range(0);
    tl::cache::CacheDir off;  // no persistence
    for (auto _ : state) {
        auto rows = tl::aptables::ap_range(tl::aptables::AuxCurve::C1, pmax, 2, off);
        benchmark::DoNotOptimize(rows.data());
    }
    state.SetComplexityN(pmax);
}
BENCHMARK(ApRangeCold)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond)->Complexity();

static void S2Sweep(benchmark::State& state) {
    double X = static_cast<double>(state.range(0));
    auto S = tl::stats::squarefree_enum(X);
    for (auto _ : state) {
        auto r = tl::density::s2_sum(S, 1.0, 2);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(S2Sweep)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

static void SquarefreeEnum(benchmark::State& state) {
    double X = static_cast<double>(state.range(0));
    for (auto _ : state) {
        auto S = tl::stats::squarefree_enum(X);
        benchmark::DoNotOptimize(S.members.data());
    }
}
BENCHMARK(SquarefreeEnum)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
