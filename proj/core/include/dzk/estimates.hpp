#ifndef DZK_ESTIMATES_HPP
#define DZK_ESTIMATES_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "dzk/dispersion.hpp"
#include "dzk/field.hpp"
#include "dzk/solver.hpp"

namespace dzk {

enum class BlockDataKind { flat, random_phase };

// Result of a dyadic-slope regression of log2 norms against the block index.
struct DecayFit {
    std::vector<int> j_values;
    std::vector<double> log2_norms;
    std::vector<double> quad_residuals;  // per-j relative change at the last sample doubling
    double fitted_slope = 0.0;
    double predicted_slope = 0.0;  // -strichartz_rate(p)
    double residual_rms = 0.0;
    int time_samples = 0;          // per dyadic window, after the inline doubling check
};

DecayFit fit_dyadic_slope(const std::vector<int>& j_values,
                          const std::vector<double>& log2_norms);

// For each j: builds unit-L^2 data supported on the (j,k) dyadic block,
// evolves it linearly over the window |t| <= 2^{-(ceil(beta) k + j)}, and
// takes the L^2-in-time norm of the oversample-2 sup norm with >= 128
// uniform samples (doubled until the quadrature moves the norm < 0.5%).
// The fitted log2-slope is compared against -strichartz_rate by the caller.
// Throws if the grid cannot resolve the blocks (Nyquist headroom, or fewer
// than 64 x-modes per block), naming the required Lx.
DecayFit strichartz_experiment(const DispersionParams& p, int k,
                               const std::vector<int>& j_values, const Grid& grid,
                               BlockDataKind data_kind, std::uint64_t seed = 0);

// |sum over |m| <= M of f_hat(m)  -  sum over |k| <= M of f(2 pi k)|.
double poisson_residual(const std::function<double(double)>& f_hat,
                        const std::function<double(double)>& f, int trunc);

// || J_y^s(fg) - f J_y^s g || / (||J_y^s f|| ||g||_inf + (||f||_inf + ||d_y f||_inf) ||J_y^{s-1} g||),
// all products dealiased, sup norms at oversample 2. Throws when the
// denominator vanishes (f = 0).
double kato_ponce_ratio(const Field& f, const Field& g, double s);

struct DependenceRow {
    double delta;
    double dist_l2;        // sup over snapshots of ||u_delta - u||_{L^2}
    double dist_hs;        // same in H^{s-1}
    RunStatus status;      // flagged if either run tripped a sentinel
};

// Evolves phi and phi + delta*psi for each delta (psi: fixed unit-H^s smooth
// random direction from `seed`), reporting sup-in-time distances at s' = 0
// and s' = s-1.
std::vector<DependenceRow> continuous_dependence(const Field& phi,
                                                 const std::vector<double>& deltas,
                                                 const DispersionParams& p,
                                                 const SolverConfig& cfg, double s,
                                                 std::uint64_t seed);

// sup_t ||u(t)||_{H^s} / (e^{g(T)} ||phi||_{H^s}); 0/0 resolves to 0.
double energy_estimate_check(const Trajectory& traj, double s, double phi_norm);

} // namespace dzk

#endif
