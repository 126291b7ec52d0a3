#ifndef DZK_QUADRATURE_HPP
#define DZK_QUADRATURE_HPP

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace dzk {

struct QuadResult {
    std::complex<double> value{0.0, 0.0};
    double error = 0.0;
    std::size_t evals = 0;
};

// Globally adaptive Gauss-Kronrod 15(7) on [a, b]. Subdivides the interval
// with the largest error estimate until the total estimate drops below
// abs_tol or the panel budget is exhausted; the returned error is the
// achieved estimate either way.
QuadResult integrate_gk(const std::function<std::complex<double>(double)>& f, double a,
                        double b, double abs_tol, std::size_t max_panels = 1 << 16);

// Same, but with initial subdivision at the given interior breakpoints
// (useful when the integrand has known kinks or stationary points).
QuadResult integrate_gk_segmented(const std::function<std::complex<double>(double)>& f,
                                  const std::vector<double>& breakpoints, double abs_tol,
                                  std::size_t max_panels = 1 << 16);

} // namespace dzk

#endif
