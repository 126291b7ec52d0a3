#include <benchmark/benchmark.h>

#include "dzk/oscillatory.hpp"

namespace {

void BM_KernelH(benchmark::State& state) {
    const double beta = state.range(0) / 10.0;
    for (auto _ : state) {
        auto r = dzk::kernel_h(25.0, beta, +1);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_KernelH)->Arg(10)->Arg(30);

void BM_VanDerCorputCell(benchmark::State& state) {
    const int j = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto r = dzk::van_der_corput_check(j, j + 3, 1.0, 16);
        benchmark::DoNotOptimize(r.max_ratio);
    }
}
BENCHMARK(BM_VanDerCorputCell)->Arg(4)->Arg(6);

} // namespace
