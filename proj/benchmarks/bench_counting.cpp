#include <benchmark/benchmark.h>

#include "twistlab/family.hpp"
#include "twistlab/ffcount.hpp"
#include "twistlab/frobdata.hpp"

namespace tl = twistlab;

static void CountPointsFp(benchmark::State& state) {
    tl::i64 p = state.range(0);
    tl::IntPoly f = tl::family::twist_sextic_integral(7);
    for (auto _ : state) {
        auto n = tl::ffcount::count_points(f, p, 1);
        benchmark::DoNotOptimize(n.count);
    }
    state.SetComplexityN(p);
}
BENCHMARK(CountPointsFp)->Arg(101)->Arg(499)->Arg(1009)->Arg(4001)->Complexity();

static void CountPointsFp2(benchmark::State& state) {
    tl::i64 p = state.range(0);
    tl::IntPoly f = tl::family::twist_sextic_integral(7);
    for (auto _ : state) {
        auto n = tl::ffcount::count_points(f, p, 2);
        benchmark::DoNotOptimize(n.count);
    }
    state.SetComplexityN(p);
}
BENCHMARK(CountPointsFp2)->Arg(61)->Arg(101)->Arg(199)->Complexity();

static void OracleEuler(benchmark::State& state) {
    tl::i64 p = state.range(0);
    for (auto _ : state) {
        auto e = tl::frobdata::oracle_euler(7, p);
        benchmark::DoNotOptimize(e.a2);
    }
}
BENCHMARK(OracleEuler)->Arg(101)->Arg(199);

static void FastEuler(benchmark::State& state) {
    tl::i64 p = state.range(0);
    tl::frobdata::TwistKernel k = tl::frobdata::infer_twist_kernel(7);
    for (auto _ : state) {
        auto e = tl::frobdata::euler_factor_good(7, p, k);
        benchmark::DoNotOptimize(e.a2);
    }
}
BENCHMARK(FastEuler)->Arg(101)->Arg(199)->Arg(1009);

BENCHMARK_MAIN();
