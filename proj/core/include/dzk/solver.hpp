#ifndef DZK_SOLVER_HPP
#define DZK_SOLVER_HPP

#include <string>
#include <vector>

#include "dzk/dispersion.hpp"
#include "dzk/field.hpp"

namespace dzk {

struct SolverConfig {
    double dt = 1e-3;
    double t_final = 1.0;
    double dealias = 2.0 / 3.0;     // fraction of the Nyquist band kept for products
    double cfl_safety = 0.5;        // dt <= cfl_safety / (max|u| * max|xi|), re-checked per step
    int snapshot_stride = 50;
    bool linear_only = false;       // drop the nonlinearity (diagnostics)
    double blowup_threshold = 1e6;  // sup-norm sentinel

    void validate() const;
};

enum class RunStatus { ok, blowup, boundary_violation, cfl_violation };

struct Trajectory {
    std::vector<double> times;
    std::vector<Field> fields;
    std::vector<double> mass_ledger;
    std::vector<double> energy_ledger;
    std::vector<double> sup_u, sup_ux, sup_uy;  // oversample-2 sup norms per snapshot
    std::vector<double> g_partial;              // running trapezoid of the three sups
    double max_imag_residual = 0.0;             // worst realness defect seen at snapshots
    RunStatus status = RunStatus::ok;
    std::string status_detail;
};

const char* to_string(RunStatus s);

// Largest kept mode index of the 2/3-style dealiasing rule; products of two
// fields truncated to this band are alias-free after re-truncation.
int dealias_cutoff(int n, double fraction);

// -1/2 d/dx (u^2) in flux form: both factors truncated before the physical
// product, the product re-truncated after.
Field nonlinear_term(const Field& u, double dealias_fraction = 2.0 / 3.0);

// One integrating-factor RK4 step: exact W0 phases carry the linear part,
// classical RK4 handles the transformed nonlinearity. Throws on a CFL
// violation, reporting the measured max|u|.
SpectralField step(const SpectralField& u, double dt, const DispersionParams& p,
                   const SolverConfig& cfg);

// Full evolution from t=0 to t_final with snapshots every snapshot_stride
// steps (plus t=0 and the final time). Aborts with a labeled status instead
// of throwing when the blow-up sentinel or boundary-decay validity check
// trips mid-run; rejects invalid initial data up front.
Trajectory evolve(const Field& phi, const DispersionParams& p, const SolverConfig& cfg);

// M(u): quadrature-weighted integral of u^2.
double mass(const Field& u);

// E(u) = 1/2 * integral of (D_x^{(1+a)/2}u)^2 + sign*(D_y^{(1+b)/2}u)^2 - u^3/3,
// quadratic terms evaluated spectrally (exact), the cubic dealiased.
double energy(const Field& u, const DispersionParams& p);

// g(T): trapezoid over snapshot times of sup|u| + sup|u_x| + sup|u_y|.
double g_functional(const Trajectory& traj);

} // namespace dzk

#endif
