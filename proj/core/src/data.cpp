#include "dzk/data.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "dzk/rng.hpp"

namespace dzk {

Field gaussian_bump(const Grid& g, double amp, double wx, double wy) {
    constexpr double pi = std::numbers::pi;
    Field f(g);
    double peak = 0.0;
    for (int p = 0; p < g.nx; ++p) {
        const double ex = std::exp(-std::pow(g.x(p) / wx, 2));
        for (int q = 0; q < g.ny; ++q) {
            double ey = 0.0;
            for (int im = -3; im <= 3; ++im) {
                const double dyc = g.y(q) - pi + 2.0 * pi * im;
                ey += std::exp(-std::pow(dyc / wy, 2));
            }
            f.at(p, q) = ex * ey;
            peak = std::max(peak, std::abs(f.at(p, q)));
        }
    }
    if (peak == 0.0) throw std::runtime_error("gaussian_bump: degenerate data");
    const double scale = amp / peak;
    for (double& v : f.values()) v *= scale;
    return f;
}

Field random_field(const Grid& g, std::uint64_t seed) {
    CounterRng rng{seed};
    Field f(g);
    auto& v = f.values();
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = rng.symmetric(i);
    return f;
}

SpectralField random_band_limited(const Grid& g, std::uint64_t seed, double sx, double sy,
                                  double max_xi, int max_n) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    CounterRng rng{seed};
    SpectralField f(g);
    const double mode_scale = static_cast<double>(g.nx) * g.ny;

    for (int mm = -g.nx / 2 + 1; mm < g.nx / 2; ++mm) {
        const double xi = two_pi * mm / g.lx;
        if (std::abs(xi) > max_xi) continue;
        for (int nn = -g.ny / 2 + 1; nn < g.ny / 2; ++nn) {
            if (std::abs(nn) > max_n) continue;
            // Fill each Hermitian pair once, from its canonical member.
            if (mm < 0 || (mm == 0 && nn < 0)) continue;
            const double env = std::exp(-(xi * xi / (sx * sx) +
                                          static_cast<double>(nn) * nn / (sy * sy)));
            const double mag = env * rng.uniform01(CounterRng::mode_counter(mm, nn, 0));
            std::complex<double> a;
            if (mm == 0 && nn == 0) {
                a = mag;  // self-conjugate mode stays real
            } else {
                const double phase =
                    two_pi * rng.uniform01(CounterRng::mode_counter(mm, nn, 1));
                a = std::polar(mag, phase);
            }
            f.mode(mm, nn) = a * mode_scale;
            if (mm != 0 || nn != 0) f.mode(-mm, -nn) = std::conj(a) * mode_scale;
        }
    }
    return f;
}

SpectralField single_mode(const Grid& g, int m_signed, int n_signed, double amp) {
    if (std::abs(m_signed) >= g.nx / 2 || std::abs(n_signed) >= g.ny / 2)
        throw std::invalid_argument("single_mode: mode outside the non-Nyquist band");
    SpectralField f(g);
    const double half = 0.5 * amp * static_cast<double>(g.nx) * g.ny;
    f.mode(m_signed, n_signed) += half;
    f.mode(-m_signed, -n_signed) += half;
    return f;
}

} // namespace dzk
