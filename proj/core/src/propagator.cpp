#include "dzk/propagator.hpp"

#include <cmath>
#include <numbers>

namespace dzk {

double dispersion_symbol(const DispersionParams& p, double xi, int n) {
    if (xi == 0.0) return 0.0;
    const double xterm = xi * std::pow(std::abs(xi), 1.0 + p.alpha);
    const double yterm =
        n == 0 ? 0.0 : xi * std::pow(std::abs(static_cast<double>(n)), 1.0 + p.beta);
    return xterm + p.sign * yterm;
}

double critical_regularity(const DispersionParams& p) {
    p.validate();
    return 0.25 * (6.0 - p.alpha) - 0.5 / (1.0 + p.beta) + 0.5 * p.ceil_beta();
}

double strichartz_rate(const DispersionParams& p) {
    p.validate();
    return 0.25 * p.alpha + 0.5 / (1.0 + p.beta);
}

std::complex<double> evolution_phase(const DispersionParams& p, double t, double xi, int n) {
    long double theta = static_cast<long double>(t) *
                        static_cast<long double>(dispersion_symbol(p, xi, n));
    if (theta > 4294967296.0L || theta < -4294967296.0L) {  // 2^32
        constexpr long double two_pi = 2.0L * std::numbers::pi_v<long double>;
        theta = std::remainder(theta, two_pi);
    }
    const double th = static_cast<double>(theta);
    return {std::cos(th), std::sin(th)};
}

SpectralField linear_evolve(const SpectralField& f, double t, const DispersionParams& p) {
    const Grid& g = f.grid();
    SpectralField out(g);
    for (int mi = 0; mi < g.nx; ++mi) {
        const int mm = g.freq_x(mi);
        const double xi = g.xi(mi);
        for (int ni = 0; ni < g.ny; ++ni) {
            const int nn = g.freq_y(ni);
            if (mm == -g.nx / 2 || nn == -g.ny / 2) continue;
            out.at(mi, ni) = (t == 0.0) ? f.at(mi, ni)
                                        : evolution_phase(p, t, xi, nn) * f.at(mi, ni);
        }
    }
    return out;
}

} // namespace dzk
