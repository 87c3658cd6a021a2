#include <benchmark/benchmark.h>

#include "skewbrace/builders.hpp"
#include "skewbrace/extensions.hpp"

using namespace skb;

static void H2bCnd(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    BraceRef Q = share(make_c_nd(n, n));
    for (auto _ : state) {
        auto H = h2b(Q, static_cast<i64>(n) * n);
        benchmark::DoNotOptimize(H.structure.factors.data());
    }
    state.SetComplexityN(n);
}
BENCHMARK(H2bCnd)->DenseRange(4, 12, 2)->Complexity();

static void SchurMultiplier(benchmark::State& state) {
    static const char* specs[] = {"c:4,2", "c:9,3", "bp:3", "prod:c:3,3|c:4,2"};
    BraceRef Q = share(build_brace(specs[state.range(0)]));
    for (auto _ : state) {
        auto M = schur_multiplier(Q);
        benchmark::DoNotOptimize(M.group.factors.data());
    }
}
BENCHMARK(SchurMultiplier)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void EnumerateCovers(benchmark::State& state) {
    BraceRef Q = share(build_brace("trivial:cyclic:3"));
    for (auto _ : state) {
        auto covers = enumerate_covers(Q);
        benchmark::DoNotOptimize(covers.covers.data());
    }
}
BENCHMARK(EnumerateCovers)->Unit(benchmark::kMillisecond);
