#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dzk/data.hpp"
#include "dzk/fft.hpp"
#include "dzk/multiplier.hpp"
#include "dzk/norms.hpp"
#include "dzk/projector.hpp"

using namespace dzk;
constexpr double pi = std::numbers::pi;

TEST_CASE("dyadic blocks tile [0,inf)") {
    CHECK(in_dyadic_block(0, 0.0));
    CHECK(in_dyadic_block(0, 0.999));
    CHECK(!in_dyadic_block(0, 1.0));
    CHECK(in_dyadic_block(1, 1.0));
    CHECK(in_dyadic_block(2, 3.0));
    CHECK(!in_dyadic_block(2, 4.0));
    CHECK(dyadic_block_of(3.0) == 2);
    CHECK(dyadic_block_of(4.0) == 3);
    CHECK(dyadic_block_of(0.5) == 0);
}

TEST_CASE("single mode at xi=3 is kept by (j,k)=(2,0) and killed elsewhere") {
    Grid g(32, 8, 2.0 * pi);  // xi = integer frequencies
    SpectralField s = single_mode(g, 3, 0, 1.0);

    SpectralField kept = lp_project(s, 2, 0);
    double diff = 0.0;
    for (int m = 0; m < g.nx; ++m)
        for (int n = 0; n < g.ny; ++n)
            diff = std::max(diff, std::abs(kept.at(m, n) - s.at(m, n)));
    CHECK(diff == 0.0);

    for (int j : {0, 1, 3, 4}) CHECK(lp_project(s, j, 0).max_abs() == 0.0);
    CHECK(lp_project(s, 2, 1).max_abs() == 0.0);
}

TEST_CASE("Littlewood-Paley completeness on a random field") {
    Grid g(64, 32, 24.0 * pi);
    SpectralField s = fft::forward(random_field(g, 31));
    const double total = l2_norm(s);

    double sum_sq = 0.0;
    const int jmax = dyadic_block_of(g.xi_max()) + 1;
    const int kmax = dyadic_block_of(g.ny / 2.0) + 1;
    for (int j = 0; j <= jmax; ++j)
        for (int k = 0; k <= kmax; ++k) {
            const double nrm = l2_norm(lp_project(s, j, k));
            sum_sq += nrm * nrm;
        }
    CHECK(sum_sq / (total * total) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("projectors are idempotent bitwise and mutually orthogonal") {
    Grid g(32, 16, 10.0);
    SpectralField s = fft::forward(random_field(g, 5));
    SpectralField once = lp_project(s, 3, 1);
    SpectralField twice = lp_project(once, 3, 1);
    for (int m = 0; m < g.nx; ++m)
        for (int n = 0; n < g.ny; ++n) CHECK(twice.at(m, n) == once.at(m, n));

    SpectralField other = lp_project(once, 2, 1);
    CHECK(other.max_abs() == 0.0);
}

TEST_CASE("weighted block norms obey the two-sided dyadic equivalence") {
    // For data in block (j,k):
    //   ||J_x^s g||^2 + ||J_y^s g||^2 in [c, C] * (2^{2sj} + 2^{2sk}) * ||g||^2
    // with c = 4^{-|s|}, C = 4^{|s|+1}.
    Grid g(128, 64, 8.0 * pi);
    SpectralField noise = fft::forward(random_field(g, 99));
    for (double s : {1.0, 0.5, -1.0, 2.0}) {
        for (int j : {0, 2, 4}) {
            for (int k : {0, 1, 3}) {
                SpectralField blk = lp_project(noise, j, k);
                const double base = l2_norm(blk);
                if (base == 0.0) continue;
                const double jx = anisotropic_norm_x(blk, s);
                const double jy = anisotropic_norm_y(blk, s);
                const double lhs = jx * jx + jy * jy;
                const double dyadic = std::exp2(2.0 * s * j) + std::exp2(2.0 * s * k);
                const double c = std::pow(4.0, -std::abs(s));
                const double C = std::pow(4.0, std::abs(s) + 1.0);
                CHECK(lhs >= c * dyadic * base * base * (1.0 - 1e-12));
                CHECK(lhs <= C * dyadic * base * base * (1.0 + 1e-12));
            }
        }
    }
}
