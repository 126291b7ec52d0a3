#ifndef DZK_FFT_HPP
#define DZK_FFT_HPP

#include "dzk/field.hpp"

namespace dzk::fft {

// Discrete analogue of f_hat(xi,n) = integral of f * e^{-i x xi} e^{-i y n}.
// Forward carries no prefactor; the inverse carries 1/(Nx*Ny). The quadrature
// weights dx, dy live in the norm routines, not here.
//
// Because x_0 = -Lx/2, the plain DFT is corrected by a (-1)^m twist per
// x-frequency row on both directions of the transform.
SpectralField forward(const Field& f);

Field inverse(const SpectralField& f);

struct InverseResult {
    Field field;
    double imag_max;   // max |Im| of the back-transform, ~0 for Hermitian input
};
InverseResult inverse_with_residual(const SpectralField& f);

// Embeds the spectrum into a grid refined by `factor` in both directions,
// splitting Nyquist rows half-and-half so real trigonometric interpolation is
// preserved, and rescaling so the represented function is unchanged.
SpectralField zero_pad(const SpectralField& f, int factor);

} // namespace dzk::fft

#endif
