#include "dzk/multiplier.hpp"

#include <cmath>
#include <stdexcept>

#include "dzk/propagator.hpp"

namespace dzk {

namespace {

// |r|^a with the continuous extension |0|^a = 0 for every a > -1; a = 0 maps
// r = 0 to 0 as well so that fractional families are consistent at the origin.
double abs_pow(double r, double a) {
    if (r == 0.0) return 0.0;
    return std::pow(std::abs(r), a);
}

} // namespace

SpectralField apply_multiplier(const SpectralField& f, const MultiplierSpec& m) {
    if (!m.symbol) throw std::invalid_argument("apply_multiplier: empty symbol");
    const Grid& g = f.grid();
    SpectralField out(g);
    for (int mi = 0; mi < g.nx; ++mi) {
        const int mm = g.freq_x(mi);
        const double xi = g.xi(mi);
        for (int ni = 0; ni < g.ny; ++ni) {
            const int nn = g.freq_y(ni);
            if (mm == -g.nx / 2 || nn == -g.ny / 2) {
                out.at(mi, ni) = 0.0;
                continue;
            }
            std::complex<double> sym = m.symbol(xi, nn);
            if (!std::isfinite(sym.real()) || !std::isfinite(sym.imag()))
                throw std::invalid_argument(
                    "apply_multiplier: symbol '" + m.description +
                    "' non-finite at (xi,n)=(" + std::to_string(xi) + "," +
                    std::to_string(nn) + ")");
            out.at(mi, ni) = sym * f.at(mi, ni);
        }
    }
    return out;
}

MultiplierSpec mult_dx_fractional(double a) {
    return {[a](double xi, int) -> std::complex<double> { return abs_pow(xi, a); },
            "D_x^" + std::to_string(a)};
}

MultiplierSpec mult_dy_fractional(double b) {
    return {[b](double, int n) -> std::complex<double> { return abs_pow(n, b); },
            "D_y^" + std::to_string(b)};
}

MultiplierSpec mult_jx(double s) {
    return {[s](double xi, int) -> std::complex<double> {
                return std::pow(1.0 + xi * xi, 0.5 * s);
            },
            "J_x^" + std::to_string(s)};
}

MultiplierSpec mult_jy(double s) {
    return {[s](double, int n) -> std::complex<double> {
                return std::pow(1.0 + static_cast<double>(n) * n, 0.5 * s);
            },
            "J_y^" + std::to_string(s)};
}

MultiplierSpec mult_partial_x() {
    return {[](double xi, int) { return std::complex<double>(0.0, xi); }, "d/dx"};
}

MultiplierSpec mult_partial_y() {
    return {[](double, int n) { return std::complex<double>(0.0, n); }, "d/dy"};
}

MultiplierSpec mult_linear_phase(const DispersionParams& p, double t) {
    return {[p, t](double xi, int n) { return evolution_phase(p, t, xi, n); },
            "W0(" + std::to_string(t) + ")"};
}

} // namespace dzk
