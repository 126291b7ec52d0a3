#ifndef DZK_OSCILLATORY_HPP
#define DZK_OSCILLATORY_HPP

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace dzk {

struct OscResult {
    std::complex<double> value{0.0, 0.0};
    double error = 0.0;
    std::size_t panels = 0;
};

// Filon-type evaluation of  integral of amp(u) * e^{i phase(u)} du  on [a,b].
//
// Panels carry the linear part of the phase exactly (closed-form moments of
// v^k e^{iBv}); the curved remainder, kept below ~0.5 rad by adaptive
// bisection, is absorbed into a Chebyshev fit of the amplitude. Cost scales
// with the square root of the total phase variation instead of the
// oscillation count, which is what makes the dyadic sweeps below feasible at
// phases of ~1e8 radians. Callers should list known kinks and stationary
// points as breakpoints so every panel sees one-signed phase curvature.
OscResult oscillatory_integral(const std::function<double(double)>& amp,
                               const std::function<double(double)>& phase, double a,
                               double b, double abs_tol,
                               const std::vector<double>& interior_breakpoints = {},
                               std::size_t max_panels = 1 << 20);

struct KernelHResult {
    std::complex<double> value{0.0, 0.0};
    double error = 0.0;
};

// H(eta1) = integral over the real line of e^{i(eta1*eta + sign*|eta|^{1+beta})}.
// Quadrature runs on [-R, R] with R = 4*max(stationary point, |eta1|) + 50;
// the tails are resolved by two analytic integration-by-parts passes with a
// rigorous remainder bound folded into `error` (kept below 1e-4). Requires
// beta >= 1 (H is unbounded below that threshold).
KernelHResult kernel_h(double eta1, double beta, int sign);

struct VdcResult {
    double max_ratio = 0.0;            // max over x of |integral| / bound
    double max_quad_error_ratio = 0.0; // worst quadrature error / bound
    double bound = 0.0;                // 2^{(l - alpha j)/2}
};

// Scans x for the largest value of
//   |integral of psi1^2(xi/2^j) e^{i(x xi + t xi |xi|^{1+alpha})} dxi|,
// at t = 2^{-l}, against the stationary-phase bound 2^{(l-alpha j)/2}.
// The scan covers the stationary locus x = -(2+alpha) t |xi|^{1+alpha} with a
// 4x margin on both sides. Requires l >= j >= 1; throws if the quadrature
// error estimate exceeds 1% of the bound.
VdcResult van_der_corput_check(int j, int l, double alpha, int x_samples = 256);

} // namespace dzk

#endif
