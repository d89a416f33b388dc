#include <benchmark/benchmark.h>

#include "quadfrac/engine.hpp"
#include "quadfrac/oracle.hpp"
#include "quadfrac/pell.hpp"
#include "quadfrac/verifier.hpp"

using namespace quadfrac;

static void BM_Decompose(benchmark::State& state) {
    Ring ring = make_ring(state.range(0));
    auto points = lattice_points(ring, 5000);
    size_t i = 0;
    for (auto _ : state) {
        const QuadInt& n = points[i];
        i = (i + 37) % points.size();
        if (ring.is_exceptional(n)) continue;
        benchmark::DoNotOptimize(decompose(ring, n));
    }
}
BENCHMARK(BM_Decompose)->Arg(-1)->Arg(-2)->Arg(-3)->Arg(-7)->Arg(-11);

static void BM_Verify(benchmark::State& state) {
    Ring ring = make_ring(-1);
    QuadInt n{1, 2};
    Decomposition dec = decompose(ring, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify(ring, n, dec));
    }
}
BENCHMARK(BM_Verify);

static void BM_IntRemDivmod(benchmark::State& state) {
    Ring ring = make_ring(-11);
    QuadInt div{1, 2};
    long k = 1;
    for (auto _ : state) {
        QuadInt x{7 * k, 3 * k + 1};
        k = k % 1000 + 1;
        benchmark::DoNotOptimize(ring.int_rem_divmod(x, div));
    }
}
BENCHMARK(BM_IntRemDivmod);

static void BM_TheoremScan(benchmark::State& state) {
    Ring ring = make_ring(-1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(scan_theorem(ring, state.range(0), 1));
    }
}
BENCHMARK(BM_TheoremScan)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

static void BM_BruteForceCone(benchmark::State& state) {
    Ring ring = make_ring(-1);
    BruteForceOptions opts;
    opts.cone_only = true;
    opts.den_norm_bound = state.range(0);
    opts.max_results = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(brute_force(ring, QuadInt{3, 1}, opts));
    }
}
BENCHMARK(BM_BruteForceCone)->Arg(100)->Arg(10000);

static void BM_PellSearch(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(pell_two_term(state.range(0)));
    }
}
BENCHMARK(BM_PellSearch)->Arg(19)->Arg(73);

BENCHMARK_MAIN();
