#include <benchmark/benchmark.h>

#include "dzk/data.hpp"
#include "dzk/fft.hpp"
#include "dzk/multiplier.hpp"
#include "dzk/norms.hpp"

namespace {

void BM_ForwardTransform(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    dzk::Grid g(n, 64, 64.0 * 3.14159265358979323846);
    dzk::Field f = dzk::random_field(g, 7);
    for (auto _ : state) {
        auto s = dzk::fft::forward(f);
        benchmark::DoNotOptimize(s.coeffs().data());
    }
    state.SetItemsProcessed(state.iterations() * g.size());
}
BENCHMARK(BM_ForwardTransform)->Arg(64)->Arg(256)->Arg(1024);

void BM_RoundTrip(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    dzk::Grid g(n, 64, 64.0 * 3.14159265358979323846);
    dzk::Field f = dzk::random_field(g, 7);
    for (auto _ : state) {
        auto back = dzk::fft::inverse(dzk::fft::forward(f));
        benchmark::DoNotOptimize(back.values().data());
    }
}
BENCHMARK(BM_RoundTrip)->Arg(256)->Arg(1024);

void BM_ApplyMultiplier(benchmark::State& state) {
    dzk::Grid g(256, 64, 64.0 * 3.14159265358979323846);
    auto s = dzk::fft::forward(dzk::random_field(g, 7));
    auto m = dzk::mult_jx(2.0);
    for (auto _ : state) {
        auto out = dzk::apply_multiplier(s, m);
        benchmark::DoNotOptimize(out.coeffs().data());
    }
}
BENCHMARK(BM_ApplyMultiplier);

void BM_SupNormOversample(benchmark::State& state) {
    dzk::Grid g(256, 64, 64.0 * 3.14159265358979323846);
    auto s = dzk::fft::forward(dzk::gaussian_bump(g, 0.5, 4.0, 1.2));
    const int factor = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(dzk::sup_norm(s, factor));
    }
}
BENCHMARK(BM_SupNormOversample)->Arg(1)->Arg(2)->Arg(4);

} // namespace
