#ifndef DZK_MULTIPLIER_HPP
#define DZK_MULTIPLIER_HPP

#include <complex>
#include <functional>
#include <string>

#include "dzk/dispersion.hpp"
#include "dzk/field.hpp"

namespace dzk {

// Fourier multiplier m(xi, n) acting diagonally on coefficients.
struct MultiplierSpec {
    std::function<std::complex<double>(double xi, int n)> symbol;
    std::string description;
};

// Pointwise product in frequency. The Nyquist rows m = -Nx/2 and n = -Ny/2
// are zeroed: they have no conjugate partner, and odd symbols applied there
// would break realness of the represented field. Throws if the symbol
// evaluates non-finite at any grid frequency.
SpectralField apply_multiplier(const SpectralField& f, const MultiplierSpec& m);

// Standard symbols.
MultiplierSpec mult_dx_fractional(double a);    // |xi|^a        (D_x^a)
MultiplierSpec mult_dy_fractional(double b);    // |n|^b         (D_y^b)
MultiplierSpec mult_jx(double s);               // (1+xi^2)^{s/2} (J_x^s)
MultiplierSpec mult_jy(double s);               // (1+n^2)^{s/2}  (J_y^s)
MultiplierSpec mult_partial_x();                // i*xi
MultiplierSpec mult_partial_y();                // i*n
MultiplierSpec mult_linear_phase(const DispersionParams& p, double t); // e^{i t F(xi,n)}

} // namespace dzk

#endif
