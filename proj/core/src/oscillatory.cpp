#include "dzk/oscillatory.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "dzk/bump.hpp"

namespace dzk {

namespace {

constexpr int kDeg = 8;                 // amplitude fit degree per panel
constexpr int kNodes = kDeg + 1;
constexpr double kThetaMax = 0.5;       // max phase-residual per panel (rad)

using Cplx = std::complex<double>;

// Chebyshev-Lobatto nodes on [-1,1], v_i = cos(i*pi/8), endpoints included.
const std::array<double, kNodes>& nodes() {
    static const auto v = [] {
        std::array<double, kNodes> a{};
        for (int i = 0; i < kNodes; ++i)
            a[i] = std::cos(i * std::numbers::pi / kDeg);
        return a;
    }();
    return v;
}

// Inverse of the monomial Vandermonde on the fixed node set, precomputed in
// extended precision: coeffs = Vinv * samples.
const std::array<std::array<double, kNodes>, kNodes>& vandermonde_inverse() {
    static const auto inv = [] {
        std::array<std::array<long double, 2 * kNodes>, kNodes> aug{};
        for (int i = 0; i < kNodes; ++i) {
            long double p = 1.0L;
            for (int k = 0; k < kNodes; ++k) {
                aug[i][k] = p;
                p *= static_cast<long double>(nodes()[i]);
            }
            aug[i][kNodes + i] = 1.0L;
        }
        for (int col = 0; col < kNodes; ++col) {  // Gauss-Jordan with pivoting
            int piv = col;
            for (int r = col + 1; r < kNodes; ++r)
                if (std::abs(aug[r][col]) > std::abs(aug[piv][col])) piv = r;
            std::swap(aug[piv], aug[col]);
            const long double d = aug[col][col];
            for (int k = 0; k < 2 * kNodes; ++k) aug[col][k] /= d;
            for (int r = 0; r < kNodes; ++r) {
                if (r == col) continue;
                const long double f = aug[r][col];
                if (f == 0.0L) continue;
                for (int k = 0; k < 2 * kNodes; ++k) aug[r][k] -= f * aug[col][k];
            }
        }
        std::array<std::array<double, kNodes>, kNodes> out{};
        for (int r = 0; r < kNodes; ++r)
            for (int c = 0; c < kNodes; ++c)
                out[r][c] = static_cast<double>(aug[r][kNodes + c]);
        return out;
    }();
    return inv;
}

// Moments mu_k(B) = integral of v^k e^{iBv} dv over [-1,1], k = 0..kDeg.
// Taylor series for small |B| (the upward recursion is unstable there),
// boundary recursion otherwise.
std::array<Cplx, kNodes> linear_phase_moments(double B) {
    std::array<Cplx, kNodes> mu{};
    if (std::abs(B) < 10.0) {
        const Cplx ib(0.0, B);
        for (int k = 0; k <= kDeg; ++k) {
            Cplx term(1.0, 0.0);  // (iB)^m / m!
            Cplx acc(0.0, 0.0);
            for (int m = 0; m < 80; ++m) {
                if ((k + m) % 2 == 0) {
                    acc += term * (2.0 / (k + m + 1));
                    if (std::abs(term) * 2.0 / (k + m + 1) < 1e-18 && m > std::abs(B))
                        break;
                }
                term *= ib / static_cast<double>(m + 1);
            }
            mu[k] = acc;
        }
        return mu;
    }
    const Cplx eip = std::polar(1.0, B);
    const Cplx eim = std::conj(eip);
    const Cplx ib(0.0, B);
    mu[0] = 2.0 * std::sin(B) / B;
    for (int k = 1; k <= kDeg; ++k) {
        const Cplx boundary = (k % 2 == 0) ? (eip - eim) : (eip + eim);
        mu[k] = boundary / ib - (static_cast<double>(k) / ib) * mu[k - 1];
    }
    return mu;
}

struct FilonPanel {
    double a, b;
    Cplx value{0.0, 0.0};
    double error = 0.0;
    bool forced = false;  // phase residual too large, must bisect

    bool operator<(const FilonPanel& o) const {
        if (forced != o.forced) return !forced;  // forced panels pop first
        return error < o.error;
    }
};

FilonPanel make_panel(const std::function<double(double)>& amp,
                      const std::function<double(double)>& phase, double a, double b) {
    FilonPanel p{a, b};
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);

    std::array<double, kNodes> ph{};
    for (int i = 0; i < kNodes; ++i) ph[i] = phase(c + h * nodes()[i]);
    const double A = 0.5 * (ph[0] + ph[kNodes - 1]);  // nodes[0]=+1, last=-1
    const double B = 0.5 * (ph[0] - ph[kNodes - 1]);

    std::array<Cplx, kNodes> g{};
    double rmax = 0.0;
    for (int i = 0; i < kNodes; ++i) {
        const double r = ph[i] - (A + B * nodes()[i]);
        rmax = std::max(rmax, std::abs(r));
        g[i] = amp(c + h * nodes()[i]) * std::polar(1.0, r);
    }
    if (rmax > kThetaMax && (b - a) > 1e-13 * std::max(1.0, std::abs(c))) {
        p.forced = true;
        p.error = rmax;
        return p;
    }

    const auto& vinv = vandermonde_inverse();
    std::array<Cplx, kNodes> coef{};
    for (int r = 0; r < kNodes; ++r) {
        Cplx s(0.0, 0.0);
        for (int i = 0; i < kNodes; ++i) s += vinv[r][i] * g[i];
        coef[r] = s;
    }

    const auto mu = linear_phase_moments(B);
    Cplx val(0.0, 0.0);
    for (int k = 0; k <= kDeg; ++k) val += coef[k] * mu[k];
    p.value = h * std::polar(1.0, A) * val;
    // Truncation indicator: the top two fit coefficients, with slack.
    p.error = 4.0 * h *
              (std::abs(coef[kDeg - 1]) * std::abs(mu[kDeg - 1]) +
               std::abs(coef[kDeg]) * std::abs(mu[kDeg]));
    return p;
}

} // namespace

OscResult oscillatory_integral(const std::function<double(double)>& amp,
                               const std::function<double(double)>& phase, double a,
                               double b, double abs_tol,
                               const std::vector<double>& interior_breakpoints,
                               std::size_t max_panels) {
    if (!(b > a)) throw std::invalid_argument("oscillatory_integral: empty interval");

    std::vector<double> bp{a, b};
    for (double x : interior_breakpoints)
        if (x > a && x < b) bp.push_back(x);
    std::sort(bp.begin(), bp.end());

    std::vector<FilonPanel> heap;
    double err_sum = 0.0;
    std::size_t forced_count = 0;
    auto push = [&](FilonPanel&& p) {
        if (p.forced) ++forced_count;
        else err_sum += p.error;
        heap.push_back(std::move(p));
        std::push_heap(heap.begin(), heap.end());
    };

    for (std::size_t i = 0; i + 1 < bp.size(); ++i)
        if (bp[i] < bp[i + 1]) push(make_panel(amp, phase, bp[i], bp[i + 1]));

    while ((forced_count > 0 || err_sum > abs_tol) && heap.size() < max_panels) {
        std::pop_heap(heap.begin(), heap.end());
        FilonPanel worst = heap.back();
        heap.pop_back();
        if (worst.forced) --forced_count;
        else err_sum -= worst.error;

        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // fp-resolution interval; keep as-is and stop refining it
            worst.forced = false;
            push(std::move(worst));
            break;
        }
        push(make_panel(amp, phase, worst.a, mid));
        push(make_panel(amp, phase, mid, worst.b));
    }

    OscResult r;
    r.panels = heap.size();
    bool leftover_forced = false;
    for (const auto& p : heap) {
        r.value += p.value;
        r.error += p.error;
        if (p.forced) leftover_forced = true;
    }
    if (leftover_forced) r.error = std::numeric_limits<double>::infinity();
    return r;
}

KernelHResult kernel_h(double eta1, double beta, int sign) {
    if (!(beta >= 1.0))
        throw std::invalid_argument("kernel_h: beta >= 1 required (H unbounded below)");
    if (sign != 1 && sign != -1) throw std::invalid_argument("kernel_h: sign must be +-1");

    const double bp1 = 1.0 + beta;
    const double eta_star = std::pow(std::abs(eta1) / bp1, 1.0 / beta);
    const double R = 4.0 * std::max(eta_star, std::abs(eta1)) + 50.0;

    auto phase = [eta1, bp1, sign](double e) {
        return eta1 * e + sign * std::pow(std::abs(e), bp1);
    };
    auto amp = [](double) { return 1.0; };

    OscResult main = oscillatory_integral(amp, phase, -R, R, 2e-5,
                                          {-eta_star, 0.0, eta_star});

    // Two integration-by-parts passes for each tail; remainder bounded by
    // |phi''(R)| / |phi'(R)|^3.
    auto tail = [beta, bp1, sign](double eta1_eff, double R_) {
        const double phi = eta1_eff * R_ + sign * std::pow(R_, bp1);
        const double d1 = eta1_eff + sign * bp1 * std::pow(R_, beta);
        const double d2 = sign * bp1 * beta * std::pow(R_, beta - 1.0);
        const Cplx eiphi = std::polar(1.0, phi);
        const Cplx i(0.0, 1.0);
        const Cplx value = -eiphi / (i * d1) + eiphi * d2 / (d1 * d1 * d1);
        const double err = std::abs(d2) / std::abs(d1 * d1 * d1);
        return std::pair<Cplx, double>(value, err);
    };

    auto [tr, er] = tail(eta1, R);   // [R, inf)
    auto [tl, el] = tail(-eta1, R);  // (-inf, -R] via eta -> -eta

    KernelHResult out;
    out.value = main.value + tr + tl;
    out.error = main.error + er + el;
    return out;
}

VdcResult van_der_corput_check(int j, int l, double alpha, int x_samples) {
    if (!(l >= j && j >= 1))
        throw std::invalid_argument("van_der_corput_check: need l >= j >= 1");
    if (!(alpha > -1.0)) throw std::invalid_argument("van_der_corput_check: alpha > -1");
    if (x_samples < 2) throw std::invalid_argument("van_der_corput_check: x_samples >= 2");

    const double scale = std::ldexp(1.0, j);                    // 2^j
    const double t = std::ldexp(1.0, -l);                       // 2^-l
    const double B = t * std::pow(scale, 2.0 + alpha);          // 2^{j(2+alpha)-l}
    const double bound = std::exp2(0.5 * (l - alpha * j));

    // Rescaled integral: 2^j * int psi1^2(u) e^{i(A u + B u|u|^{1+alpha})} du
    // with A = x*2^j; quadrature tolerance sits well under 1% of the bound,
    // which equals B^{-1/2} in u-space.
    const double u_tol = 2e-3 / std::sqrt(B);

    auto amp = [](double u) { return psi1_sq(u); };

    const double ap2 = 2.0 + alpha;
    const double xc = -ap2 * t * std::pow(0.75 * scale, 1.0 + alpha);
    const double w = ap2 * t * std::pow(4.0 * scale, 1.0 + alpha);

    VdcResult out;
    out.bound = bound;
    for (int s = 0; s < x_samples; ++s) {
        const double x = xc - 4.0 * w + 8.0 * w * s / (x_samples - 1);
        const double A = x * scale;
        auto phase = [A, B, alpha](double u) {
            return A * u + B * u * std::pow(std::abs(u), 1.0 + alpha);
        };

        std::vector<double> breaks{-0.25, 0.25};
        if (A * B < 0.0) {
            const double ustar = std::pow(-A / (B * ap2), 1.0 / (1.0 + alpha));
            if (ustar > 0.2 && ustar < 4.5) {
                breaks.push_back(ustar);
                breaks.push_back(-ustar);
            }
        }

        OscResult q = oscillatory_integral(amp, phase, -4.0, 4.0, u_tol, breaks);
        const double magnitude = scale * std::abs(q.value);
        const double quad_err = scale * q.error;
        out.max_ratio = std::max(out.max_ratio, magnitude / bound);
        out.max_quad_error_ratio = std::max(out.max_quad_error_ratio, quad_err / bound);
    }

    if (!(out.max_quad_error_ratio < 0.01))
        throw std::runtime_error(
            "van_der_corput_check: quadrature error exceeds 1% of the bound");
    return out;
}

} // namespace dzk
