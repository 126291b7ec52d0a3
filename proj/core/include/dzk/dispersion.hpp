#ifndef DZK_DISPERSION_HPP
#define DZK_DISPERSION_HPP

#include <cmath>
#include <stdexcept>

namespace dzk {

// Parameters of the dispersion operator d_x(D_x^{1+alpha} +- D_y^{1+beta}).
// Requires alpha > -1 and beta >= 1; sign selects the +- branch and is used
// coherently in the symbol, the energy functional, and the solver.
struct DispersionParams {
    double alpha = 1.0;
    double beta = 1.0;
    int sign = +1;

    DispersionParams() = default;
    DispersionParams(double a, double b, int s) : alpha(a), beta(b), sign(s) {
        validate();
    }

    void validate() const {
        if (!(alpha > -1.0) || !std::isfinite(alpha))
            throw std::invalid_argument("DispersionParams: alpha > -1 required");
        if (!(beta >= 1.0) || !std::isfinite(beta))
            throw std::invalid_argument("DispersionParams: beta >= 1 required");
        if (sign != 1 && sign != -1)
            throw std::invalid_argument("DispersionParams: sign must be +1 or -1");
    }

    int ceil_beta() const { return static_cast<int>(std::ceil(beta)); }
};

// Dispersion symbol F(xi, n) = xi|xi|^{1+alpha} + sign * xi|n|^{1+beta}.
// Odd in xi, zero at xi = 0; |0|^{1+alpha} extends by 0 for every alpha > -1.
double dispersion_symbol(const DispersionParams& p, double xi, int n);

// Regularity threshold (6-alpha)/4 - 1/(2(1+beta)) + ceil(beta)/2 above which
// the flow map is well-posed.
double critical_regularity(const DispersionParams& p);

// Dyadic decay rate alpha/4 + 1/(2(1+beta)) of the frequency-localized
// L^2_t L^inf_xy norm of the linear group.
double strichartz_rate(const DispersionParams& p);

} // namespace dzk

#endif
