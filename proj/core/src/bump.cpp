#include "dzk/bump.hpp"

#include <cmath>

namespace dzk {

double smooth_step(double tau) {
    if (tau <= 0.0) return 0.0;
    if (tau >= 1.0) return 1.0;
    const double a = std::exp(-1.0 / tau);
    const double b = std::exp(-1.0 / (1.0 - tau));
    return a / (a + b);
}

double psi1(double r) {
    const double a = std::abs(r);
    if (a <= 0.25 || a >= 4.0) return 0.0;
    if (a < 0.5) return smooth_step((a - 0.25) / 0.25);
    if (a <= 2.0) return 1.0;
    return 1.0 - smooth_step((a - 2.0) / 2.0);
}

double psi0(double r) {
    const double a = std::abs(r);
    if (a <= 1.0) return 1.0;
    if (a >= 2.0) return 0.0;
    return 1.0 - smooth_step(a - 1.0);
}

} // namespace dzk
