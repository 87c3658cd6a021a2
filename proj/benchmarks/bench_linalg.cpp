#include <benchmark/benchmark.h>

#include "skewbrace/int_matrix.hpp"

#include <random>

using namespace skb;

namespace {

IntMatrix random_matrix(int r, int c, int seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> val(-9, 9);
    IntMatrix m(r, c);
    for (auto& x : m.a) x = val(rng);
    return m;
}

} // namespace

static void SmithNormalForm(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    IntMatrix m = random_matrix(n, n, 42);
    for (auto _ : state) {
        auto s = smith_normal_form(m);
        benchmark::DoNotOptimize(s.S.a.data());
    }
    state.SetComplexityN(n);
}
BENCHMARK(SmithNormalForm)->RangeMultiplier(2)->Range(8, 64)->Complexity();

static void SolutionLattice(benchmark::State& state) {
    int k = static_cast<int>(state.range(0));
    std::mt19937 rng(7);
    i64 m = 144;
    std::uniform_int_distribution<i64> val(0, m - 1);
    std::vector<ivec> rows(3 * k, ivec(k));
    for (auto& row : rows)
        for (auto& x : row) x = val(rng);
    for (auto _ : state) {
        auto gens = solution_lattice_rows(rows, k, m);
        benchmark::DoNotOptimize(gens.data());
    }
    state.SetComplexityN(k);
}
BENCHMARK(SolutionLattice)->RangeMultiplier(2)->Range(16, 256)->Complexity();

BENCHMARK_MAIN();
