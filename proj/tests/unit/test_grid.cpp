#include <doctest.h>

#include <numbers>

#include "dzk/grid.hpp"

using dzk::Grid;
constexpr double pi = std::numbers::pi;

TEST_CASE("grid collocation points and frequencies") {
    Grid g(8, 4, 16.0 * pi);

    CHECK(g.x(0) == doctest::Approx(-8.0 * pi));
    CHECK(g.x(4) == doctest::Approx(0.0));
    CHECK(g.y(0) == 0.0);
    CHECK(g.y(2) == doctest::Approx(pi));

    // FFT layout: m = 0..3 nonnegative, m = 4..7 negative.
    CHECK(g.freq_x(0) == 0);
    CHECK(g.freq_x(3) == 3);
    CHECK(g.freq_x(4) == -4);
    CHECK(g.freq_x(7) == -1);
    CHECK(g.xi(1) == doctest::Approx(2.0 * pi / (16.0 * pi)));
    CHECK(g.xi_max() == doctest::Approx(0.5));

    CHECK(g.index_x(-1) == 7);
    CHECK(g.index_y(1) == 1);
}

TEST_CASE("grid validation") {
    CHECK_THROWS_AS(Grid(2, 8, 1.0), std::invalid_argument);   // too small
    CHECK_THROWS_AS(Grid(8, 12, 1.0), std::invalid_argument);  // not a power of two
    CHECK_THROWS_AS(Grid(8, 8, -1.0), std::invalid_argument);
    CHECK_NOTHROW(Grid(4, 4, 1.0));
}
