#include <benchmark/benchmark.h>

#include "m3p/bijection.hpp"

namespace {

void BM_DecomposeClass(benchmark::State& state) {
    int p = static_cast<int>(state.range(0));
    int N = static_cast<int>(state.range(1));
    auto cls = m3p::enumerate_admissible(p, N, 6);
    for (auto _ : state)
        for (const auto& nu : cls)
            benchmark::DoNotOptimize(m3p::decompose(nu, p, N));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(cls.size()));
}
BENCHMARK(BM_DecomposeClass)->Args({4, 9})->Args({5, 12});

void BM_EnumerateClass(benchmark::State& state) {
    int p = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(m3p::enumerate_admissible(p, 12, 6));
}
BENCHMARK(BM_EnumerateClass)->Arg(4)->Arg(7);

}  // namespace
