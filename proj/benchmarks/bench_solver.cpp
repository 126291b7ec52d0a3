#include <benchmark/benchmark.h>

#include "dzk/data.hpp"
#include "dzk/fft.hpp"
#include "dzk/solver.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;

void BM_NonlinearTerm(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    dzk::Grid g(n, n / 4, 64.0 * kPi);
    dzk::Field u = dzk::gaussian_bump(g, 0.5, 4.0, 1.2);
    for (auto _ : state) {
        auto f = dzk::nonlinear_term(u);
        benchmark::DoNotOptimize(f.values().data());
    }
}
BENCHMARK(BM_NonlinearTerm)->Arg(128)->Arg(256);

void BM_Step(benchmark::State& state) {
    dzk::Grid g(256, 64, 64.0 * kPi);
    dzk::DispersionParams p(1.0, 1.0, +1);
    dzk::SolverConfig cfg;
    cfg.dt = 1e-3;
    auto u = dzk::fft::forward(dzk::gaussian_bump(g, 0.5, 4.0, 1.2));
    for (auto _ : state) {
        u = dzk::step(u, cfg.dt, p, cfg);
        benchmark::DoNotOptimize(u.coeffs().data());
    }
}
BENCHMARK(BM_Step);

} // namespace
