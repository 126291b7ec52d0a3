#ifndef DZK_DATA_HPP
#define DZK_DATA_HPP

#include <cstdint>

#include "dzk/field.hpp"

namespace dzk {

// Smooth localized initial data: a Gaussian in x times a periodized Gaussian
// in y (centered at y = pi), rescaled so the peak collocation value is
// exactly `amp`. Periodization keeps the data C-infinity on the torus.
Field gaussian_bump(const Grid& g, double amp, double wx, double wy);

// Real field with iid uniform [-1,1) samples; exercises full spectral
// content including Nyquist rows.
Field random_field(const Grid& g, std::uint64_t seed);

// Hermitian-symmetric spectrum with Gaussian envelope
// exp(-(xi^2/sx^2 + n^2/sy^2)) and counter-seeded random phases, truncated to
// |xi| <= max_xi, |n| <= max_n (Nyquist rows excluded). Coefficients are
// scaled so the represented continuum function is grid-independent: the same
// seed on a refined grid samples the same function.
SpectralField random_band_limited(const Grid& g, std::uint64_t seed, double sx, double sy,
                                  double max_xi, int max_n);

// Real single mode amp*cos(xi_m x + n y) placed via a Hermitian pair.
SpectralField single_mode(const Grid& g, int m_signed, int n_signed, double amp);

} // namespace dzk

#endif
