#ifndef DZK_NORMS_HPP
#define DZK_NORMS_HPP

#include <utility>
#include <vector>

#include "dzk/field.hpp"

namespace dzk {

// Discrete norms carry the quadrature weights dx = Lx/Nx, dy = 2*pi/Ny so
// they converge to the continuum integrals as the grid is refined. Under the
// bare-forward/1/(NxNy)-inverse transform convention the spectral L^2 norm
// squared is (dx*dy/(Nx*Ny)) * sum |c|^2, and Plancherel is an identity.

double l2_norm(const Field& f);
double l2_norm(const SpectralField& f);

// (1 + xi^2 + n^2)^{s/2} weight.
double sobolev_norm(const SpectralField& f, double s);
// (1 + xi^2)^{s/2} weight (J_x^s), and (1 + n^2)^{s/2} (J_y^s).
double anisotropic_norm_x(const SpectralField& f, double s);
double anisotropic_norm_y(const SpectralField& f, double s);

// L^inf over collocation points of the trigonometric interpolant refined by
// `oversample` (1, 2 or 4). Collocation maxima under-estimate band-limited
// suprema; 2 is the default used throughout.
double sup_norm(const Field& f, int oversample = 2);
double sup_norm(const SpectralField& f, int oversample = 2);

enum class TimeLp { L1, L2, Linf };

// Lebesgue norm in time of uniformly sampled scalar data: trapezoidal
// quadrature of |v|^p over the sampled interval, max over samples for p=inf.
// Throws for fewer than 2 samples when p < inf, or non-uniform spacing.
double mixed_norm(const std::vector<std::pair<double, double>>& samples, TimeLp p);

struct BoundaryDecayReport {
    bool ok;
    double outer_max;   // max |u| on the outer 10% of the x-box
    double peak;        // max |u| overall
};

// The x direction stands in for the real line, so runs are valid only while
// the field stays negligible near the box edge: outer-region amplitude must
// be below 1e-8 of the peak.
BoundaryDecayReport boundary_decay_check(const Field& f);

} // namespace dzk

#endif
