#include "dzk/solver.hpp"

#include <cmath>
#include <stdexcept>

#include "dzk/fft.hpp"
#include "dzk/multiplier.hpp"
#include "dzk/norms.hpp"
#include "dzk/propagator.hpp"

namespace dzk {

void SolverConfig::validate() const {
    if (!(dt > 0.0)) throw std::invalid_argument("SolverConfig: dt must be positive");
    if (!(t_final > 0.0)) throw std::invalid_argument("SolverConfig: T must be positive");
    if (!(dealias > 0.0 && dealias <= 1.0))
        throw std::invalid_argument("SolverConfig: dealias fraction in (0,1]");
    if (!(cfl_safety > 0.0 && cfl_safety <= 1.0))
        throw std::invalid_argument("SolverConfig: cfl_safety in (0,1]");
    if (snapshot_stride < 1)
        throw std::invalid_argument("SolverConfig: snapshot_stride >= 1");
}

int dealias_cutoff(int n, double fraction) {
    if (fraction >= 1.0) return n / 2 - 1;
    // For the quadratic 2/3 rule the kept band must satisfy 3*K < N so that
    // aliased products land outside it.
    int k = static_cast<int>(std::floor(0.5 * n * fraction));
    while (k > 0 && 2 * (n / 2 - k) <= k) --k;
    return k;
}

namespace {

void truncate_band(SpectralField& f, int kx, int ky) {
    const Grid& g = f.grid();
    for (int mi = 0; mi < g.nx; ++mi) {
        const int mm = g.freq_x(mi);
        const bool kill_row = std::abs(mm) > kx;
        for (int ni = 0; ni < g.ny; ++ni) {
            if (kill_row || std::abs(g.freq_y(ni)) > ky) f.at(mi, ni) = 0.0;
        }
    }
}

// N(u)^ = -(i xi / 2) * T[ (T u)^2 ] with T the dealias truncation.
SpectralField nonlinear_rhs(const SpectralField& u_hat, double fraction) {
    const Grid& g = u_hat.grid();
    const int kx = dealias_cutoff(g.nx, fraction);
    const int ky = dealias_cutoff(g.ny, fraction);

    SpectralField trunc = u_hat;
    truncate_band(trunc, kx, ky);
    Field u = fft::inverse(trunc);
    for (double& v : u.values()) v = v * v;
    SpectralField prod = fft::forward(u);
    truncate_band(prod, kx, ky);

    for (int mi = 0; mi < g.nx; ++mi) {
        const std::complex<double> half_ixi(0.0, -0.5 * g.xi(mi));
        for (int ni = 0; ni < g.ny; ++ni) prod.at(mi, ni) *= half_ixi;
    }
    return prod;
}

// Diagonal phase tables for one (grid, dt, params) combination.
struct PhaseTables {
    std::vector<std::complex<double>> half, full;

    PhaseTables(const Grid& g, double dt, const DispersionParams& p)
        : half(g.size()), full(g.size()) {
        for (int mi = 0; mi < g.nx; ++mi) {
            const int mm = g.freq_x(mi);
            const double xi = g.xi(mi);
            for (int ni = 0; ni < g.ny; ++ni) {
                const int nn = g.freq_y(ni);
                const std::size_t idx = static_cast<std::size_t>(mi) * g.ny + ni;
                if (mm == -g.nx / 2 || nn == -g.ny / 2) {
                    half[idx] = full[idx] = 0.0;  // Nyquist rows dropped
                    continue;
                }
                half[idx] = evolution_phase(p, 0.5 * dt, xi, nn);
                full[idx] = evolution_phase(p, dt, xi, nn);
            }
        }
    }
};

struct CflViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check_cfl(const Field& u, double dt, const SolverConfig& cfg) {
    const double vmax = u.max_abs();
    const double speed = vmax * u.grid().xi_max();
    if (speed > 0.0 && dt > cfg.cfl_safety / speed)
        throw CflViolation("step: CFL violation, max|u| = " + std::to_string(vmax) +
                           " requires dt <= " + std::to_string(cfg.cfl_safety / speed));
}

SpectralField rk4_step(const SpectralField& u_hat, const PhaseTables& ph, double dt,
                       const SolverConfig& cfg) {
    const std::size_t n = u_hat.coeffs().size();
    const double fr = cfg.dealias;

    auto apply = [n](const std::vector<std::complex<double>>& table, SpectralField f) {
        auto& c = f.coeffs();
        for (std::size_t i = 0; i < n; ++i) c[i] *= table[i];
        return f;
    };
    auto axpy = [n](SpectralField x, double a, const SpectralField& y) {
        auto& c = x.coeffs();
        const auto& d = y.coeffs();
        for (std::size_t i = 0; i < n; ++i) c[i] += a * d[i];
        return x;
    };

    if (cfg.linear_only) return apply(ph.full, u_hat);

    const SpectralField k1 = nonlinear_rhs(u_hat, fr);
    const SpectralField a = apply(ph.half, axpy(u_hat, 0.5 * dt, k1));
    const SpectralField k2 = nonlinear_rhs(a, fr);
    const SpectralField b = axpy(apply(ph.half, u_hat), 0.5 * dt, k2);
    const SpectralField k3 = nonlinear_rhs(b, fr);
    const SpectralField c = axpy(apply(ph.full, u_hat), dt, apply(ph.half, k3));
    const SpectralField k4 = nonlinear_rhs(c, fr);

    SpectralField out = apply(ph.full, u_hat);
    out = axpy(std::move(out), dt / 6.0, apply(ph.full, k1));
    out = axpy(std::move(out), dt / 3.0, apply(ph.half, k2));
    out = axpy(std::move(out), dt / 3.0, apply(ph.half, k3));
    out = axpy(std::move(out), dt / 6.0, k4);
    return out;
}

} // namespace

Field nonlinear_term(const Field& u, double dealias_fraction) {
    return fft::inverse(nonlinear_rhs(fft::forward(u), dealias_fraction));
}

SpectralField step(const SpectralField& u, double dt, const DispersionParams& p,
                   const SolverConfig& cfg) {
    cfg.validate();
    p.validate();
    check_cfl(fft::inverse(u), dt, cfg);
    PhaseTables ph(u.grid(), dt, p);
    return rk4_step(u, ph, dt, cfg);
}

Trajectory evolve(const Field& phi, const DispersionParams& p, const SolverConfig& cfg) {
    cfg.validate();
    p.validate();
    phi.require_finite();

    auto initial_check = boundary_decay_check(phi);
    if (!initial_check.ok)
        throw std::invalid_argument(
            "evolve: initial data violates the boundary-decay validity check (outer/peak = " +
            std::to_string(initial_check.outer_max / std::max(initial_check.peak, 1e-300)) +
            ")");

    const Grid& g = phi.grid();
    const long nsteps = std::lround(cfg.t_final / cfg.dt);
    const bool exact_division =
        std::abs(nsteps * cfg.dt - cfg.t_final) <= 1e-9 * cfg.t_final && nsteps > 0;
    const long full_steps = exact_division ? nsteps
                                           : static_cast<long>(cfg.t_final / cfg.dt);
    const double dt_last = exact_division ? 0.0 : cfg.t_final - full_steps * cfg.dt;

    Trajectory traj;
    SpectralField u_hat = fft::forward(phi);
    PhaseTables ph(g, cfg.dt, p);

    auto record = [&](double time, const Field& u) -> bool {
        const double m = mass(u);
        const double e = energy(u, p);
        SpectralField uh = fft::forward(u);
        const double su = sup_norm(uh, 2);
        const double sx = sup_norm(apply_multiplier(uh, mult_partial_x()), 2);
        const double sy = sup_norm(apply_multiplier(uh, mult_partial_y()), 2);

        double gp = 0.0;
        if (!traj.times.empty()) {
            const double prev =
                traj.sup_u.back() + traj.sup_ux.back() + traj.sup_uy.back();
            gp = traj.g_partial.back() +
                 0.5 * (time - traj.times.back()) * (prev + su + sx + sy);
        }
        traj.times.push_back(time);
        traj.fields.push_back(u);
        traj.mass_ledger.push_back(m);
        traj.energy_ledger.push_back(e);
        traj.sup_u.push_back(su);
        traj.sup_ux.push_back(sx);
        traj.sup_uy.push_back(sy);
        traj.g_partial.push_back(gp);

        if (su > cfg.blowup_threshold) {
            traj.status = RunStatus::blowup;
            traj.status_detail = "sup-norm " + std::to_string(su) + " exceeded sentinel at t=" +
                                 std::to_string(time);
            return false;
        }
        auto bd = boundary_decay_check(u);
        if (!bd.ok) {
            traj.status = RunStatus::boundary_violation;
            traj.status_detail = "outer-box amplitude " + std::to_string(bd.outer_max) +
                                 " vs peak " + std::to_string(bd.peak) + " at t=" +
                                 std::to_string(time);
            return false;
        }
        return true;
    };

    if (!record(0.0, phi)) return traj;

    auto snapshot = [&](double time) -> bool {
        auto inv = fft::inverse_with_residual(u_hat);
        traj.max_imag_residual = std::max(traj.max_imag_residual, inv.imag_max);
        return record(time, inv.field);
    };

    try {
        for (long s = 1; s <= full_steps; ++s) {
            check_cfl(fft::inverse(u_hat), cfg.dt, cfg);
            u_hat = rk4_step(u_hat, ph, cfg.dt, cfg);
            const bool last = (s == full_steps) && dt_last == 0.0;
            if (s % cfg.snapshot_stride == 0 || last) {
                if (!snapshot(s * cfg.dt) || last) return traj;
            }
        }
        if (dt_last > 0.0) {
            check_cfl(fft::inverse(u_hat), dt_last, cfg);
            PhaseTables ph_last(g, dt_last, p);
            u_hat = rk4_step(u_hat, ph_last, dt_last, cfg);
            snapshot(cfg.t_final);
        }
    } catch (const CflViolation& e) {
        traj.status = RunStatus::cfl_violation;
        traj.status_detail = e.what();
    }
    return traj;
}

const char* to_string(RunStatus s) {
    switch (s) {
        case RunStatus::ok: return "ok";
        case RunStatus::blowup: return "blowup";
        case RunStatus::boundary_violation: return "boundary_violation";
        case RunStatus::cfl_violation: return "cfl_violation";
    }
    return "unknown";
}

double mass(const Field& u) {
    double acc = 0.0;
    for (double v : u.values()) acc += v * v;
    return acc * u.grid().cell_area();
}

double energy(const Field& u, const DispersionParams& p) {
    const Grid& g = u.grid();
    SpectralField u_hat = fft::forward(u);

    // Quadratic terms via Plancherel; Nyquist rows excluded as in every
    // multiplier application.
    double qx = 0.0, qy = 0.0;
    for (int mi = 0; mi < g.nx; ++mi) {
        const int mm = g.freq_x(mi);
        if (mm == -g.nx / 2) continue;
        const double ax = std::pow(std::abs(g.xi(mi)), 1.0 + p.alpha);
        for (int ni = 0; ni < g.ny; ++ni) {
            const int nn = g.freq_y(ni);
            if (nn == -g.ny / 2) continue;
            const double c2 = std::norm(u_hat.at(mi, ni));
            if (c2 == 0.0) continue;
            qx += ax * c2;
            if (nn != 0)
                qy += std::pow(std::abs(static_cast<double>(nn)), 1.0 + p.beta) * c2;
        }
    }
    const double spectral_weight = g.cell_area() / (static_cast<double>(g.nx) * g.ny);
    qx *= spectral_weight;
    qy *= spectral_weight;

    SpectralField trunc = u_hat;
    truncate_band(trunc, dealias_cutoff(g.nx, 2.0 / 3.0), dealias_cutoff(g.ny, 2.0 / 3.0));
    Field ut = fft::inverse(trunc);
    double cubic = 0.0;
    for (double v : ut.values()) cubic += v * v * v;
    cubic *= g.cell_area();

    return 0.5 * (qx + p.sign * qy - cubic / 3.0);
}

double g_functional(const Trajectory& traj) {
    if (traj.times.size() < 2)
        throw std::invalid_argument("g_functional: need at least two snapshots");
    return traj.g_partial.back();
}

} // namespace dzk
