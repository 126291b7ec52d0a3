#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "dzk/data.hpp"
#include "dzk/fft.hpp"
#include "dzk/norms.hpp"

using namespace dzk;
constexpr double pi = std::numbers::pi;

namespace {

// Independent O(N^4) double-sum DFT, straight from the definition with the
// -Lx/2 collocation offset. Oracle for the FFT path.
SpectralField naive_dft(const Field& f) {
    const Grid& g = f.grid();
    SpectralField out(g);
    for (int m = 0; m < g.nx; ++m) {
        const double xi = g.xi(m);
        for (int n = 0; n < g.ny; ++n) {
            const int nn = g.freq_y(n);
            std::complex<double> acc{0.0, 0.0};
            for (int p = 0; p < g.nx; ++p)
                for (int q = 0; q < g.ny; ++q)
                    acc += f.at(p, q) *
                           std::polar(1.0, -(g.x(p) * xi + g.y(q) * nn));
            out.at(m, n) = acc;
        }
    }
    return out;
}

} // namespace

TEST_CASE("forward transform of zero is zero") {
    Grid g(8, 8, 2.0 * pi);
    SpectralField s = fft::forward(Field(g));
    CHECK(s.max_abs() == 0.0);
}

TEST_CASE("cos(y) has exactly two nonzero coefficients at n=+-1, xi=0") {
    Grid g(16, 8, 4.0 * pi);
    Field f(g);
    for (int p = 0; p < g.nx; ++p)
        for (int q = 0; q < g.ny; ++q) f.at(p, q) = std::cos(g.y(q));
    SpectralField s = fft::forward(f);

    const double expected = 0.5 * g.nx * g.ny;
    CHECK(std::abs(s.mode(0, 1) - expected) < 1e-9 * expected);
    CHECK(std::abs(s.mode(0, -1) - expected) < 1e-9 * expected);
    double rest = 0.0;
    for (int m = 0; m < g.nx; ++m)
        for (int n = 0; n < g.ny; ++n) {
            if (m == 0 && (n == 1 || n == g.ny - 1)) continue;
            rest = std::max(rest, std::abs(s.at(m, n)));
        }
    CHECK(rest < 1e-10 * expected);
}

TEST_CASE("fft matches the naive double-sum DFT on an 8x8 grid") {
    Grid g(8, 8, 5.0);
    Field f = random_field(g, 123);
    SpectralField fast = fft::forward(f);
    SpectralField slow = naive_dft(f);
    double worst = 0.0;
    for (int m = 0; m < g.nx; ++m)
        for (int n = 0; n < g.ny; ++n)
            worst = std::max(worst, std::abs(fast.at(m, n) - slow.at(m, n)));
    CHECK(worst < 1e-10 * slow.max_abs());
}

TEST_CASE("round trip and Plancherel on random fields across grid sizes") {
    for (int n : {8, 16, 64, 256}) {
        Grid g(n, std::min(n, 64), 32.0 * pi);
        Field f = random_field(g, 1000 + n);
        SpectralField s = fft::forward(f);
        Field back = fft::inverse(s);

        double err = 0.0, scale = f.max_abs();
        for (std::size_t i = 0; i < f.values().size(); ++i)
            err = std::max(err, std::abs(back.values()[i] - f.values()[i]));
        CHECK(err < 1e-12 * scale);

        CHECK(l2_norm(s) / l2_norm(f) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("hermitian symmetry holds for real input") {
    Grid g(16, 8, 10.0);
    SpectralField s = fft::forward(random_field(g, 9));
    CHECK(s.hermitian_defect() < 1e-10 * s.max_abs());
}

TEST_CASE("non-finite input is rejected naming the offending index") {
    Grid g(8, 8, 1.0);
    Field f(g);
    f.at(3, 5) = std::nan("");
    CHECK_THROWS_WITH_AS(fft::forward(f), doctest::Contains("(3,5)"),
                         std::invalid_argument);
}

TEST_CASE("zero padding preserves represented values and refines the max") {
    Grid g(16, 8, 4.0 * pi);
    SpectralField s = fft::forward(gaussian_bump(g, 1.0, 1.5, 1.5));
    SpectralField padded = fft::zero_pad(s, 2);
    Field coarse = fft::inverse(s);
    Field fine = fft::inverse(padded);

    // Fine grid contains the coarse collocation points at even indices.
    double worst = 0.0;
    for (int p = 0; p < g.nx; ++p)
        for (int q = 0; q < g.ny; ++q)
            worst = std::max(worst,
                             std::abs(fine.at(2 * p, 2 * q) - coarse.at(p, q)));
    CHECK(worst < 1e-12);

    CHECK(fine.max_abs() >= coarse.max_abs());
}
