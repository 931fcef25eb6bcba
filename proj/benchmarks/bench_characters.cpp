#include <benchmark/benchmark.h>

#include "m3p/characters.hpp"
#include "m3p/partitions.hpp"

namespace {

void BM_FermionicFinitized(benchmark::State& state) {
    int p = static_cast<int>(state.range(0));
    int order = static_cast<int>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(m3p::fermionic_finitized(p, 8, order));
}
BENCHMARK(BM_FermionicFinitized)->Args({4, 30})->Args({7, 30})->Args({7, 60});

void BM_RecursionRhs(benchmark::State& state) {
    int p = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(m3p::recursion_rhs(p, 10, 6, 30));
}
BENCHMARK(BM_RecursionRhs)->Arg(4)->Arg(7);

void BM_GenFunction(benchmark::State& state) {
    int p = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(m3p::admissible_gen_function(p, 10, 6, 30));
}
BENCHMARK(BM_GenFunction)->Arg(4)->Arg(7);

void BM_PochhammerInverse(benchmark::State& state) {
    int order = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(m3p::pochhammer_inverse(m3p::kInfinity, order));
}
BENCHMARK(BM_PochhammerInverse)->Arg(30)->Arg(120);

}  // namespace
