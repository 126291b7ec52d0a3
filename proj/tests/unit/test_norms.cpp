#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dzk/data.hpp"
#include "dzk/fft.hpp"
#include "dzk/norms.hpp"

using namespace dzk;
constexpr double pi = std::numbers::pi;

TEST_CASE("sobolev norm basics") {
    Grid g(32, 16, 12.0 * pi);
    CHECK(sobolev_norm(SpectralField(g), 3.0) == 0.0);

    SpectralField s = fft::forward(random_field(g, 21));
    CHECK(sobolev_norm(s, 0.0) == doctest::Approx(l2_norm(s)).epsilon(1e-12));
    CHECK(anisotropic_norm_x(s, 0.0) == doctest::Approx(l2_norm(s)).epsilon(1e-12));
    CHECK(anisotropic_norm_y(s, 0.0) == doctest::Approx(l2_norm(s)).epsilon(1e-12));
}

TEST_CASE("H^1 norm of a single mode at (xi,n)=(2,1) is sqrt(6) times its L^2 norm") {
    Grid g(32, 8, 16.0 * pi);  // dxi = 1/8, so xi=2 sits at m=16... use m for xi=2
    // xi = 2*pi*m/lx = m/8; choose m=16 -> xi=2.
    SpectralField s = single_mode(g, 16, 1, 1.0);
    CHECK(sobolev_norm(s, 1.0) ==
          doctest::Approx(std::sqrt(6.0) * l2_norm(s)).epsilon(1e-12));
}

TEST_CASE("sup norm of cos(y) is 1 at oversample 2") {
    Grid g(8, 16, 5.0);
    SpectralField s = single_mode(g, 0, 1, 1.0);
    CHECK(sup_norm(s, 2) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(sup_norm(SpectralField(g), 2) == 0.0);
}

TEST_CASE("two-mode sup norm matches a 1e6-point brute-force scan") {
    Grid g(64, 32, 20.0 * pi);
    // u = cos(2*pi*x/Lx) + cos(y): place xi = dxi at m=1.
    SpectralField s = single_mode(g, 1, 0, 1.0);
    const SpectralField other = single_mode(g, 0, 1, 1.0);
    for (std::size_t i = 0; i < s.coeffs().size(); ++i)
        s.coeffs()[i] += other.coeffs()[i];

    double brute = 0.0;
    const double dxi = 2.0 * pi / g.lx;
    for (int i = 0; i < 1000; ++i) {
        const double x = -0.5 * g.lx + g.lx * i / 1000.0;
        for (int q = 0; q < 1000; ++q) {
            const double y = 2.0 * pi * q / 1000.0;
            brute = std::max(brute, std::abs(std::cos(dxi * x) + std::cos(y)));
        }
    }
    CHECK(sup_norm(s, 4) == doctest::Approx(brute).epsilon(1e-6));
}

TEST_CASE("sup norm is monotone in oversample for band-limited fields") {
    Grid g(32, 16, 9.0);
    SpectralField s = random_band_limited(g, 17, 1.0, 1.0, 0.5 * g.xi_max(), g.ny / 4);
    const double s1 = sup_norm(s, 1);
    const double s2 = sup_norm(s, 2);
    const double s4 = sup_norm(s, 4);
    CHECK(s2 >= s1 - 1e-14);
    CHECK(s4 >= s2 - 1e-14);
    CHECK_THROWS_AS(sup_norm(s, 3), std::invalid_argument);
}

TEST_CASE("mixed norm: trapezoid quadrature and the max") {
    std::vector<std::pair<double, double>> constant;
    for (int i = 0; i <= 10; ++i) constant.emplace_back(0.1 * i, 3.0);
    CHECK(mixed_norm(constant, TimeLp::L1) == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(mixed_norm(constant, TimeLp::Linf) == 3.0);

    std::vector<std::pair<double, double>> ramp;
    for (int i = 0; i <= 1000; ++i) {
        const double t = i / 1000.0;
        ramp.emplace_back(t, t);
    }
    CHECK(mixed_norm(ramp, TimeLp::L2) ==
          doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-5));

    CHECK_THROWS_AS(mixed_norm({{0.0, 1.0}}, TimeLp::L2), std::invalid_argument);
    CHECK(mixed_norm({{0.0, -2.0}}, TimeLp::Linf) == 2.0);

    std::vector<std::pair<double, double>> uneven{{0.0, 1.0}, {0.1, 1.0}, {0.3, 1.0}};
    CHECK_THROWS_AS(mixed_norm(uneven, TimeLp::L1), std::invalid_argument);
}

TEST_CASE("boundary decay check flags mass near the box edge") {
    Grid g(64, 8, 32.0 * pi);
    Field good = gaussian_bump(g, 1.0, 3.0, 1.5);
    CHECK(boundary_decay_check(good).ok);

    Field bad(g);
    bad.at(1, 0) = 1.0;  // x near -Lx/2
    CHECK(!boundary_decay_check(bad).ok);

    CHECK(boundary_decay_check(Field(g)).ok);  // zero field is valid
}
