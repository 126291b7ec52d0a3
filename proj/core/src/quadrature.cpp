#include "dzk/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace dzk {

namespace {

// QUADPACK 15-point Kronrod rule with embedded 7-point Gauss rule.
constexpr double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691, 0.7415311855993944,
    0.5860872354676911, 0.4058451513773972, 0.2077849550078985, 0.0};
constexpr double kWgk[8] = {
    0.0229353220105292, 0.0630920926299786, 0.1047900103222502, 0.1406532597155259,
    0.1690047266392679, 0.1903505780647854, 0.2044329400752989, 0.2094821410847278};
constexpr double kWg[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189, 0.4179591836734694};

struct Panel {
    double a, b;
    std::complex<double> value;
    double error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

Panel evaluate_panel(const std::function<std::complex<double>(double)>& f, double a,
                     double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);

    std::complex<double> kronrod = kWgk[7] * f(c);
    std::complex<double> gauss = kWg[3] * f(c);
    for (int i = 0; i < 7; ++i) {
        const std::complex<double> lo = f(c - h * kXgk[i]);
        const std::complex<double> hi = f(c + h * kXgk[i]);
        kronrod += kWgk[i] * (lo + hi);
        if (i % 2 == 1) gauss += kWg[i / 2] * (lo + hi);
    }
    kronrod *= h;
    gauss *= h;
    return {a, b, kronrod, std::abs(kronrod - gauss)};
}

} // namespace

QuadResult integrate_gk_segmented(const std::function<std::complex<double>(double)>& f,
                                  const std::vector<double>& breakpoints, double abs_tol,
                                  std::size_t max_panels) {
    if (breakpoints.size() < 2)
        throw std::invalid_argument("integrate_gk: need at least two breakpoints");
    std::vector<double> bp = breakpoints;
    std::sort(bp.begin(), bp.end());

    std::priority_queue<Panel> queue;
    QuadResult result;
    double total_error = 0.0;
    std::complex<double> total{0.0, 0.0};

    for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
        if (bp[i] == bp[i + 1]) continue;
        Panel p = evaluate_panel(f, bp[i], bp[i + 1]);
        result.evals += 15;
        total += p.value;
        total_error += p.error;
        queue.push(p);
    }

    std::size_t panels = queue.size();
    while (total_error > abs_tol && panels < max_panels) {
        Panel worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) break;  // interval at fp resolution

        Panel left = evaluate_panel(f, worst.a, mid);
        Panel right = evaluate_panel(f, mid, worst.b);
        result.evals += 30;
        total += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
        ++panels;
    }

    result.value = total;
    result.error = total_error;
    return result;
}

QuadResult integrate_gk(const std::function<std::complex<double>(double)>& f, double a,
                        double b, double abs_tol, std::size_t max_panels) {
    return integrate_gk_segmented(f, {a, b}, abs_tol, max_panels);
}

} // namespace dzk
