#include "dzk/estimates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "dzk/data.hpp"
#include "dzk/fft.hpp"
#include "dzk/multiplier.hpp"
#include "dzk/norms.hpp"
#include "dzk/projector.hpp"
#include "dzk/propagator.hpp"
#include "dzk/rng.hpp"

namespace dzk {

DecayFit fit_dyadic_slope(const std::vector<int>& j_values,
                          const std::vector<double>& log2_norms) {
    if (j_values.size() != log2_norms.size() || j_values.size() < 2)
        throw std::invalid_argument("fit_dyadic_slope: need >= 2 matched points");
    const std::size_t n = j_values.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += j_values[i];
        sy += log2_norms[i];
        sxx += static_cast<double>(j_values[i]) * j_values[i];
        sxy += j_values[i] * log2_norms[i];
    }
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) throw std::invalid_argument("fit_dyadic_slope: degenerate j set");
    const double slope = (n * sxy - sx * sy) / denom;
    const double intercept = (sy - slope * sx) / n;

    double rss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = log2_norms[i] - (intercept + slope * j_values[i]);
        rss += r * r;
    }
    DecayFit fit;
    fit.j_values = j_values;
    fit.log2_norms = log2_norms;
    fit.fitted_slope = slope;
    fit.residual_rms = std::sqrt(rss / n);
    return fit;
}

namespace {

// Unit-L^2 data supported exactly on the (j,k) dyadic block.
SpectralField block_data(const Grid& g, int j, int k, BlockDataKind kind,
                         std::uint64_t seed) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    CounterRng rng{seed};
    SpectralField f(g);
    for (int mm = 1; mm < g.nx / 2; ++mm) {
        const double xi = two_pi * mm / g.lx;
        if (!in_dyadic_block(j, xi)) continue;
        for (int nn = -g.ny / 2 + 1; nn < g.ny / 2; ++nn) {
            if (!in_dyadic_block(k, nn)) continue;
            std::complex<double> a(1.0, 0.0);
            if (kind == BlockDataKind::random_phase)
                a = std::polar(1.0, two_pi * rng.uniform01(CounterRng::mode_counter(mm, nn)));
            f.mode(mm, nn) = a;
            f.mode(-mm, -nn) = std::conj(a);
        }
    }
    // j = 0 has xi = 0 content; fill the mm = 0 column too.
    if (j == 0) {
        for (int nn = 1; nn < g.ny / 2; ++nn) {
            if (!in_dyadic_block(k, nn)) continue;
            std::complex<double> a(1.0, 0.0);
            if (kind == BlockDataKind::random_phase)
                a = std::polar(1.0, two_pi * rng.uniform01(CounterRng::mode_counter(0, nn)));
            f.mode(0, nn) = a;
            f.mode(0, -nn) = std::conj(a);
        }
        if (in_dyadic_block(k, 0)) f.mode(0, 0) = 1.0;
    }
    const double norm = l2_norm(f);
    if (norm == 0.0)
        throw std::invalid_argument("strichartz_experiment: block (j=" + std::to_string(j) +
                                    ",k=" + std::to_string(k) + ") holds no grid modes");
    const double inv = 1.0 / norm;
    for (auto& c : f.coeffs()) c *= inv;
    return f;
}

struct TimeNorm {
    double value = 0.0;
    int samples = 0;
    double rel_change = 0.0;  // movement at the last sample doubling
};

// L^2-in-time of the sup norm over the window, with the sample count doubled
// until the quadrature is converged to 0.5%.
TimeNorm window_time_norm(const SpectralField& phi_jk, double t_window,
                          const DispersionParams& p) {
    std::vector<std::pair<double, double>> samples;
    TimeNorm out;
    double prev = -1.0;
    for (int count = 129; count <= 1025; count = 2 * (count - 1) + 1) {
        samples.clear();
        samples.reserve(count);
        for (int i = 0; i < count; ++i) {
            const double t = -t_window + 2.0 * t_window * i / (count - 1);
            const double s = sup_norm(linear_evolve(phi_jk, t, p), 2);
            samples.emplace_back(t, s);
        }
        out.value = mixed_norm(samples, TimeLp::L2);
        out.samples = count;
        if (prev > 0.0) {
            out.rel_change = std::abs(out.value - prev) / out.value;
            if (out.rel_change < 5e-3) break;
        }
        prev = out.value;
    }
    return out;
}

} // namespace

DecayFit strichartz_experiment(const DispersionParams& p, int k,
                               const std::vector<int>& j_values, const Grid& grid,
                               BlockDataKind data_kind, std::uint64_t seed) {
    p.validate();
    if (k < 0) throw std::invalid_argument("strichartz_experiment: k >= 0");
    if (j_values.size() < 2)
        throw std::invalid_argument("strichartz_experiment: need >= 2 j values");

    int jmax = 0;
    for (int j : j_values) {
        if (j < 1) throw std::invalid_argument("strichartz_experiment: j >= 1 required");
        jmax = std::max(jmax, j);
    }
    const double top = std::ldexp(1.0, jmax);
    if (grid.xi_max() < 1.25 * top)
        throw std::invalid_argument(
            "strichartz_experiment: grid Nyquist " + std::to_string(grid.xi_max()) +
            " below 1.25*2^max(j); increase Nx or decrease Lx");
    for (int j : j_values) {
        // Mode count of block j in xi: ~2^j * Lx / (2 pi) across both signs.
        const double modes = std::ldexp(1.0, j) * grid.lx / (2.0 * std::numbers::pi);
        if (modes < 64.0) {
            const double lx_needed = 64.0 * 2.0 * std::numbers::pi / std::ldexp(1.0, j);
            throw std::invalid_argument(
                "strichartz_experiment: block j=" + std::to_string(j) +
                " under-resolved; requires Lx >= " + std::to_string(lx_needed));
        }
    }
    if (grid.ny < 4 * (1 << std::max(0, k - 1)))
        throw std::invalid_argument("strichartz_experiment: Ny too small for k=" +
                                    std::to_string(k));

    std::vector<double> log_norms;
    std::vector<double> quad_residuals;
    int samples_used = 0;
    for (int j : j_values) {
        SpectralField phi = block_data(grid, j, k, data_kind, seed);
        const double t_window = std::ldexp(1.0, -(p.ceil_beta() * k + j));
        TimeNorm tn = window_time_norm(phi, t_window, p);
        log_norms.push_back(std::log2(tn.value));
        quad_residuals.push_back(tn.rel_change);
        samples_used = std::max(samples_used, tn.samples);
    }

    DecayFit fit = fit_dyadic_slope(j_values, log_norms);
    fit.predicted_slope = -strichartz_rate(p);
    fit.quad_residuals = quad_residuals;
    fit.time_samples = samples_used;
    return fit;
}

double poisson_residual(const std::function<double(double)>& f_hat,
                        const std::function<double(double)>& f, int trunc) {
    if (trunc < 1) throw std::invalid_argument("poisson_residual: truncation >= 1");
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double lhs = 0.0, rhs = 0.0;
    // Symmetric accumulation, small |m| last, to keep the sums well ordered.
    for (int m = trunc; m >= 1; --m) {
        lhs += f_hat(m) + f_hat(-m);
        rhs += f(two_pi * m) + f(-two_pi * m);
    }
    lhs += f_hat(0);
    rhs += f(0.0);
    return std::abs(lhs - rhs);
}

namespace {

Field dealiased_product(const Field& a, const Field& b) {
    const Grid& g = a.grid();
    const int kx = dealias_cutoff(g.nx, 2.0 / 3.0);
    const int ky = dealias_cutoff(g.ny, 2.0 / 3.0);
    auto trunc = [&](const Field& f) {
        SpectralField s = fft::forward(f);
        for (int mi = 0; mi < g.nx; ++mi) {
            const bool kill = std::abs(g.freq_x(mi)) > kx;
            for (int ni = 0; ni < g.ny; ++ni)
                if (kill || std::abs(g.freq_y(ni)) > ky) s.at(mi, ni) = 0.0;
        }
        return fft::inverse(s);
    };
    Field ta = trunc(a);
    Field tb = trunc(b);
    Field prod(g);
    for (std::size_t i = 0; i < prod.values().size(); ++i)
        prod.values()[i] = ta.values()[i] * tb.values()[i];
    return trunc(prod);
}

} // namespace

double kato_ponce_ratio(const Field& f, const Field& g_field, double s) {
    if (!(s >= 1.0)) throw std::invalid_argument("kato_ponce_ratio: s >= 1 required");
    if (f.grid() != g_field.grid())
        throw std::invalid_argument("kato_ponce_ratio: mismatched grids");

    SpectralField f_hat = fft::forward(f);
    SpectralField g_hat = fft::forward(g_field);

    const Field jsg = fft::inverse(apply_multiplier(g_hat, mult_jy(s)));

    // J_y^s applied after/before the product along the two routes.
    SpectralField route1 = apply_multiplier(fft::forward(dealiased_product(f, g_field)),
                                            mult_jy(s));
    SpectralField route2 = fft::forward(dealiased_product(f, jsg));

    for (std::size_t i = 0; i < route1.coeffs().size(); ++i)
        route1.coeffs()[i] -= route2.coeffs()[i];
    const double numerator = l2_norm(route1);

    const double jys_f = l2_norm(apply_multiplier(f_hat, mult_jy(s)));
    const double g_inf = sup_norm(g_hat, 2);
    const double f_inf = sup_norm(f_hat, 2);
    const double fy_inf = sup_norm(apply_multiplier(f_hat, mult_partial_y()), 2);
    const double jys1_g = l2_norm(apply_multiplier(g_hat, mult_jy(s - 1.0)));

    const double denominator = jys_f * g_inf + (f_inf + fy_inf) * jys1_g;
    if (denominator == 0.0)
        throw std::invalid_argument("kato_ponce_ratio: zero denominator (f = 0?)");
    return numerator / denominator;
}

std::vector<DependenceRow> continuous_dependence(const Field& phi,
                                                 const std::vector<double>& deltas,
                                                 const DispersionParams& p,
                                                 const SolverConfig& cfg, double s,
                                                 std::uint64_t seed) {
    if (!(s > critical_regularity(p)))
        throw std::invalid_argument(
            "continuous_dependence: s must exceed the critical regularity " +
            std::to_string(critical_regularity(p)));

    const Grid& g = phi.grid();
    // Fixed smooth perturbation direction, unit H^s norm.
    SpectralField psi_hat = random_band_limited(g, seed, 1.5, 1.5, 0.25 * g.xi_max(),
                                                std::max(2, g.ny / 8));
    const double psi_norm = sobolev_norm(psi_hat, s);
    if (psi_norm == 0.0) throw std::runtime_error("continuous_dependence: empty direction");
    for (auto& c : psi_hat.coeffs()) c /= psi_norm;
    const Field psi = fft::inverse(psi_hat);

    const Trajectory base = evolve(phi, p, cfg);

    std::vector<DependenceRow> rows;
    for (double delta : deltas) {
        Field pert(g);
        for (std::size_t i = 0; i < pert.values().size(); ++i)
            pert.values()[i] = phi.values()[i] + delta * psi.values()[i];
        const Trajectory other = evolve(pert, p, cfg);

        DependenceRow row{delta, 0.0, 0.0, RunStatus::ok};
        if (base.status != RunStatus::ok) row.status = base.status;
        if (other.status != RunStatus::ok) row.status = other.status;

        const std::size_t common = std::min(base.fields.size(), other.fields.size());
        for (std::size_t i = 0; i < common; ++i) {
            SpectralField diff = fft::forward(other.fields[i]);
            const SpectralField bhat = fft::forward(base.fields[i]);
            for (std::size_t c = 0; c < diff.coeffs().size(); ++c)
                diff.coeffs()[c] -= bhat.coeffs()[c];
            row.dist_l2 = std::max(row.dist_l2, l2_norm(diff));
            row.dist_hs = std::max(row.dist_hs, sobolev_norm(diff, s - 1.0));
        }
        rows.push_back(row);
    }
    return rows;
}

double energy_estimate_check(const Trajectory& traj, double s, double phi_norm) {
    if (traj.times.empty())
        throw std::invalid_argument("energy_estimate_check: empty trajectory");
    double sup_hs = 0.0;
    for (const auto& f : traj.fields)
        sup_hs = std::max(sup_hs, sobolev_norm(fft::forward(f), s));
    if (sup_hs == 0.0) return 0.0;
    const double gt = g_functional(traj);
    return sup_hs / (std::exp(gt) * phi_norm);
}

} // namespace dzk
