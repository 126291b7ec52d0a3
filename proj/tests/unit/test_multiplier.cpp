#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "dzk/data.hpp"
#include "dzk/fft.hpp"
#include "dzk/multiplier.hpp"
#include "dzk/norms.hpp"

using namespace dzk;
constexpr double pi = std::numbers::pi;

TEST_CASE("J_x^0 is the identity on the non-Nyquist band") {
    Grid g(16, 8, 7.0);
    SpectralField s = fft::forward(random_field(g, 4));
    // Nyquist rows are zeroed by every multiplier application; compare on a
    // field without Nyquist content.
    for (int n = 0; n < g.ny; ++n) s.at(g.nx / 2, n) = 0.0;
    for (int m = 0; m < g.nx; ++m) s.at(m, g.ny / 2) = 0.0;

    SpectralField out = apply_multiplier(s, mult_jx(0.0));
    double worst = 0.0;
    for (int m = 0; m < g.nx; ++m)
        for (int n = 0; n < g.ny; ++n)
            worst = std::max(worst, std::abs(out.at(m, n) - s.at(m, n)));
    CHECK(worst == 0.0);
}

TEST_CASE("D_y^2 maps cos(y) to itself") {
    Grid g(8, 16, 3.0);
    SpectralField s = single_mode(g, 0, 1, 1.0);  // cos(y)
    Field out = fft::inverse(apply_multiplier(s, mult_dy_fractional(2.0)));
    Field in = fft::inverse(s);
    double worst = 0.0;
    for (std::size_t i = 0; i < out.values().size(); ++i)
        worst = std::max(worst, std::abs(out.values()[i] - in.values()[i]));
    CHECK(worst < 1e-13);
}

TEST_CASE("D_x^{1/2} of a Gaussian matches dense quadrature of the multiplier integral") {
    // Continuum oracle: f = e^{-x^2}, f_hat = sqrt(pi) e^{-xi^2/4},
    // (D_x^{1/2} f)(x) = (1/2pi) * integral |xi|^{1/2} f_hat(xi) e^{i xi x} dxi,
    // evaluated by a 4096-point trapezoid on [-40, 40] (tail < 1e-170).
    auto oracle = [](double x) {
        const int n = 4096;
        const double R = 40.0;
        const double h = 2.0 * R / n;
        double acc = 0.0;
        for (int i = 0; i <= n; ++i) {
            const double xi = -R + i * h;
            const double w = (i == 0 || i == n) ? 0.5 : 1.0;
            acc += w * std::sqrt(std::abs(xi)) * std::sqrt(pi) *
                   std::exp(-0.25 * xi * xi) * std::cos(xi * x);
        }
        return acc * h / (2.0 * pi);
    };

    Grid g(4096, 4, 128.0 * pi);
    Field f(g);
    for (int p = 0; p < g.nx; ++p)
        for (int q = 0; q < g.ny; ++q) f.at(p, q) = std::exp(-g.x(p) * g.x(p));
    Field out = fft::inverse(apply_multiplier(fft::forward(f), mult_dx_fractional(0.5)));

    // Both sides carry an O(h^{3/2}) Riemann-sum error from the |xi|^{1/2}
    // cusp at the origin; 1e-3 reflects the oracle's 4096-point resolution.
    for (double x : {0.0, 0.7, 2.3}) {
        const int p = static_cast<int>(std::lround((x + 0.5 * g.lx) / g.dx()));
        const double xg = g.x(p);
        CHECK(out.at(p, 0) == doctest::Approx(oracle(xg)).epsilon(1e-3));
    }
}

TEST_CASE("symbol returning NaN at a grid frequency is rejected") {
    Grid g(8, 8, 1.0);
    SpectralField s = fft::forward(random_field(g, 2));
    MultiplierSpec bad{[](double xi, int) -> std::complex<double> {
                           return xi == 0.0 ? std::nan("") : 1.0;
                       },
                       "bad"};
    CHECK_THROWS_AS(apply_multiplier(s, bad), std::invalid_argument);
}

TEST_CASE("multiplier composition: indicator symbols compose bitwise") {
    Grid g(32, 16, 11.0);
    SpectralField s = fft::forward(random_field(g, 77));
    MultiplierSpec a{[](double xi, int) -> std::complex<double> {
                         return std::abs(xi) < 2.0 ? 1.0 : 0.0;
                     },
                     "chi_a"};
    MultiplierSpec b{[](double, int n) -> std::complex<double> {
                         return std::abs(n) < 3 ? 1.0 : 0.0;
                     },
                     "chi_b"};
    MultiplierSpec ab{[&](double xi, int n) { return a.symbol(xi, n) * b.symbol(xi, n); },
                      "chi_ab"};
    SpectralField seq = apply_multiplier(apply_multiplier(s, b), a);
    SpectralField one = apply_multiplier(s, ab);
    for (int m = 0; m < g.nx; ++m)
        for (int n = 0; n < g.ny; ++n) CHECK(seq.at(m, n) == one.at(m, n));
}

TEST_CASE("multiplier composition: smooth symbols compose to round-off") {
    Grid g(32, 16, 11.0);
    SpectralField s = fft::forward(random_field(g, 78));
    MultiplierSpec a = mult_jx(1.5);
    MultiplierSpec b = mult_jy(-0.5);
    MultiplierSpec ab{[&](double xi, int n) { return a.symbol(xi, n) * b.symbol(xi, n); },
                      "ab"};
    SpectralField seq = apply_multiplier(apply_multiplier(s, b), a);
    SpectralField one = apply_multiplier(s, ab);
    double worst = 0.0;
    for (int m = 0; m < g.nx; ++m)
        for (int n = 0; n < g.ny; ++n)
            worst = std::max(worst, std::abs(seq.at(m, n) - one.at(m, n)));
    CHECK(worst < 4e-15 * s.max_abs());
}

TEST_CASE("i*xi times an even real profile keeps the represented field real") {
    Grid g(64, 8, 16.0 * pi);
    Field f(g);
    for (int p = 0; p < g.nx; ++p)
        for (int q = 0; q < g.ny; ++q)
            f.at(p, q) = std::exp(-std::pow(g.x(p) / 2.0, 2));  // even in x
    SpectralField d = apply_multiplier(fft::forward(f), mult_partial_x());
    auto inv = fft::inverse_with_residual(d);
    CHECK(inv.imag_max < 1e-13 * std::max(1.0, inv.field.max_abs()));
}
