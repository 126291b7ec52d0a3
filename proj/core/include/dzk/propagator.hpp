#ifndef DZK_PROPAGATOR_HPP
#define DZK_PROPAGATOR_HPP

#include <complex>

#include "dzk/dispersion.hpp"
#include "dzk/field.hpp"

namespace dzk {

// e^{i t F(xi,n)} with the angle reduced mod 2*pi in extended precision when
// |t*F| exceeds 2^32.
std::complex<double> evolution_phase(const DispersionParams& p, double t, double xi, int n);

// The linear group W0(t): multiplies each coefficient by e^{i t F(xi,n)}.
// Unitary on L^2, W0(0) = id, and Hermitian symmetry is preserved since F is
// odd. Nyquist rows are zeroed as in every multiplier application.
SpectralField linear_evolve(const SpectralField& f, double t, const DispersionParams& p);

} // namespace dzk

#endif
