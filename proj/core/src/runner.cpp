#include "dzk/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <limits>
#include <mutex>
#include <numbers>
#include <ostream>
#include <thread>

#include "dzk/data.hpp"
#include "dzk/estimates.hpp"
#include "dzk/fft.hpp"
#include "dzk/norms.hpp"
#include "dzk/oscillatory.hpp"
#include "dzk/snapshot_io.hpp"

namespace dzk {

namespace {

namespace fs = std::filesystem;
using csv::format_double;

// Pinned assertion thresholds. These mirror the library's documented
// contracts; manifests cannot loosen them.
constexpr double kMassDriftTol = 1e-8;
constexpr double kEnergyDriftTol = 1e-6;
constexpr double kRealnessTol = 1e-12;
constexpr double kSlopeSlack = 0.15;
constexpr double kResidualRmsTol = 0.3;
constexpr double kKernelHBound = 4.0;
constexpr double kKernelHQuadTol = 1e-4;
constexpr double kFresnelTol = 1e-3;
constexpr double kVdcRatioBound = 10.0;
constexpr double kPoissonTol = 1e-12;
constexpr double kKatoPonceDoublingTol = 0.10;
constexpr double kDegenerateTol = 1e-12;
constexpr double kContDepFactor = 2.0;
constexpr double kEnergyRatioBound = 10.0;

const std::vector<std::string> kColumns = {"experiment", "alpha", "beta", "sign", "j",
                                           "k",          "measured", "predicted", "ratio",
                                           "quad_error", "verdict"};

struct RowBuilder {
    const Manifest& m;
    csv::Table table;

    explicit RowBuilder(const Manifest& m_) : m(m_) { table.header = kColumns; }

    void add(const std::string& j, const std::string& k, double measured, double predicted,
             double ratio, const std::string& quad_error, bool pass) {
        table.rows.push_back({to_string(m.experiment), format_double(m.params.alpha),
                              format_double(m.params.beta), std::to_string(m.params.sign),
                              j, k, format_double(measured), format_double(predicted),
                              format_double(ratio), quad_error, pass ? "pass" : "fail"});
    }
};

void parallel_for(int n, const std::function<void(int)>& fn) {
    const int workers = std::min(worker_count(), n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr first_error;
    std::mutex err_mu;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mu);
                    if (!first_error) first_error = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

std::string run_id(const Manifest& m) {
    return std::string(to_string(m.experiment)) + "_s" + std::to_string(m.seed);
}

void write_ledger(const fs::path& dir, const std::string& id, const Trajectory& traj) {
    csv::Table t;
    t.header = {"time", "mass", "energy", "sup_u", "sup_ux", "sup_uy", "g_partial"};
    for (std::size_t i = 0; i < traj.times.size(); ++i)
        t.rows.push_back({format_double(traj.times[i]), format_double(traj.mass_ledger[i]),
                          format_double(traj.energy_ledger[i]), format_double(traj.sup_u[i]),
                          format_double(traj.sup_ux[i]), format_double(traj.sup_uy[i]),
                          format_double(traj.g_partial[i])});
    csv::write(dir / (id + "_ledger.csv"), t);
}

double relative_drift(const std::vector<double>& ledger) {
    if (ledger.empty()) return 0.0;
    const double ref = ledger.front();
    const double scale = std::max(std::abs(ref), 1e-300);
    double worst = 0.0;
    for (double v : ledger) worst = std::max(worst, std::abs(v - ref) / scale);
    return worst;
}

// ---- experiment bodies -----------------------------------------------------

void run_evolve(const Manifest& m, RowBuilder& rows, std::vector<Verdict>& verdicts) {
    const Field phi = gaussian_bump(m.grid, m.data_amp, m.data_wx, m.data_wy);
    const Trajectory traj = evolve(phi, m.params, m.solver);

    const std::string id = run_id(m);
    write_ledger(m.output_dir, id, traj);
    for (std::size_t i = 0; i < traj.fields.size(); ++i)
        write_snapshot(m.output_dir / (id + "_t" + std::to_string(i) + ".dzkf"),
                       traj.fields[i]);

    const double mass_drift = relative_drift(traj.mass_ledger);
    const double energy_drift = relative_drift(traj.energy_ledger);
    const double peak = traj.fields.empty() ? 1.0 : std::max(traj.fields.front().max_abs(), 1e-300);
    const double realness = traj.max_imag_residual / peak;
    const bool status_ok = traj.status == RunStatus::ok;

    rows.add("0", "", mass_drift, kMassDriftTol, mass_drift / kMassDriftTol, "",
             mass_drift < kMassDriftTol);
    rows.add("1", "", energy_drift, kEnergyDriftTol, energy_drift / kEnergyDriftTol, "",
             energy_drift < kEnergyDriftTol);
    rows.add("2", "", realness, kRealnessTol, realness / kRealnessTol, "",
             realness < kRealnessTol);

    verdicts.push_back({"run_status", status_ok,
                        std::string("status=") + to_string(traj.status) +
                            (traj.status_detail.empty() ? "" : " " + traj.status_detail)});
    verdicts.push_back({"mass_drift", mass_drift < kMassDriftTol,
                        "max_rel_drift=" + format_double(mass_drift) + " tol=" +
                            format_double(kMassDriftTol)});
    verdicts.push_back({"energy_drift", energy_drift < kEnergyDriftTol,
                        "max_rel_drift=" + format_double(energy_drift) + " tol=" +
                            format_double(kEnergyDriftTol)});
    verdicts.push_back({"realness", realness < kRealnessTol,
                        "peak_rel_imag=" + format_double(realness) + " tol=" +
                            format_double(kRealnessTol)});
}

void run_strichartz(const Manifest& m, RowBuilder& rows, std::vector<Verdict>& verdicts) {
    const double rate = strichartz_rate(m.params);
    for (int k : m.st_k) {
        const DecayFit fit = strichartz_experiment(m.params, k, m.st_j, m.grid,
                                                   m.st_data_kind, m.seed);
        for (std::size_t i = 0; i < fit.j_values.size(); ++i) {
            const int j = fit.j_values[i];
            const double measured = std::exp2(fit.log2_norms[i]);
            const double predicted = std::exp2(-rate * j);
            rows.add(std::to_string(j), std::to_string(k), measured, predicted,
                     measured / predicted, format_double(fit.quad_residuals[i]),
                     fit.fitted_slope <= -rate + kSlopeSlack);
        }
        const bool slope_ok = fit.fitted_slope <= -rate + kSlopeSlack;
        const bool rms_ok = fit.residual_rms < kResidualRmsTol;
        verdicts.push_back(
            {"decay_slope_k" + std::to_string(k), slope_ok && rms_ok,
             "fitted_slope=" + format_double(fit.fitted_slope) +
                 " predicted_slope=" + format_double(-rate) +
                 " threshold=" + format_double(-rate + kSlopeSlack) +
                 " residual_rms=" + format_double(fit.residual_rms) +
                 " time_samples=" + std::to_string(fit.time_samples)});
    }
}

void run_vdc(const Manifest& m, RowBuilder& rows, std::vector<Verdict>& verdicts) {
    struct Cell {
        int j, l;
        VdcResult r;
        std::string error;
    };
    std::vector<Cell> cells;
    for (int j : m.vdc_j)
        for (int l = j; l <= j + m.vdc_l_span; ++l) cells.push_back({j, l, {}, {}});

    parallel_for(static_cast<int>(cells.size()), [&](int i) {
        try {
            cells[i].r = van_der_corput_check(cells[i].j, cells[i].l, m.params.alpha,
                                              m.vdc_x_samples);
        } catch (const std::exception& e) {
            cells[i].error = e.what();
        }
    });

    double worst = 0.0;
    bool all_ok = true;
    for (const auto& c : cells) {
        if (!c.error.empty()) {
            all_ok = false;
            verdicts.push_back({"vdc_j" + std::to_string(c.j) + "_l" + std::to_string(c.l),
                                false, c.error});
            continue;
        }
        worst = std::max(worst, c.r.max_ratio);
        const bool ok = c.r.max_ratio <= kVdcRatioBound;
        all_ok = all_ok && ok;
        rows.add(std::to_string(c.j), std::to_string(c.l), c.r.max_ratio * c.r.bound,
                 c.r.bound, c.r.max_ratio, format_double(c.r.max_quad_error_ratio), ok);
    }
    verdicts.push_back({"vdc_ratio_bound", all_ok,
                        "max_ratio=" + format_double(worst) + " bound=" +
                            format_double(kVdcRatioBound)});
}

void run_kernel_h(const Manifest& m, RowBuilder& rows, std::vector<Verdict>& verdicts) {
    const int count = static_cast<int>(std::floor(2.0 * m.h_eta_max / m.h_eta_step)) + 1;
    std::vector<KernelHResult> values(count);
    parallel_for(count, [&](int i) {
        const double eta1 = -m.h_eta_max + i * m.h_eta_step;
        values[i] = kernel_h(eta1, m.params.beta, m.params.sign);
    });

    const double sqrt_pi = std::sqrt(std::numbers::pi);
    double max_h = 0.0, max_err = 0.0, max_fresnel_dev = 0.0;
    for (int i = 0; i < count; ++i) {
        const double mag = std::abs(values[i].value);
        max_h = std::max(max_h, mag);
        max_err = std::max(max_err, values[i].error);
        if (m.params.beta == 1.0)
            max_fresnel_dev = std::max(max_fresnel_dev, std::abs(mag - sqrt_pi));
        rows.add(std::to_string(i), "", mag, kKernelHBound, mag / kKernelHBound,
                 format_double(values[i].error), mag <= kKernelHBound);
    }

    verdicts.push_back({"h_bounded", max_h <= kKernelHBound,
                        "max_|H|=" + format_double(max_h) + " bound=" +
                            format_double(kKernelHBound)});
    verdicts.push_back({"h_quadrature", max_err <= kKernelHQuadTol,
                        "max_error_estimate=" + format_double(max_err) + " tol=" +
                            format_double(kKernelHQuadTol)});
    if (m.params.beta == 1.0)
        verdicts.push_back({"h_fresnel", max_fresnel_dev <= kFresnelTol,
                            "max_| |H|-sqrt(pi) |=" + format_double(max_fresnel_dev) +
                                " tol=" + format_double(kFresnelTol)});
}

void run_poisson(const Manifest& m, RowBuilder& rows, std::vector<Verdict>& verdicts) {
    const double sqrt_pi = std::sqrt(std::numbers::pi);
    bool all_ok = true;
    for (std::size_t i = 0; i < m.poisson_widths.size(); ++i) {
        const double w = m.poisson_widths[i];
        auto f = [w](double x) { return std::exp(-std::pow(x / w, 2)); };
        auto f_hat = [w, sqrt_pi](double xi) {
            return w * sqrt_pi * std::exp(-std::pow(0.5 * w * xi, 2));
        };
        const double res = poisson_residual(f_hat, f, m.poisson_trunc);

        auto f_shift = [f](double x) { return f(x - 2.0 * std::numbers::pi); };
        const double res_shift = poisson_residual(f_hat, f_shift, m.poisson_trunc);

        const bool ok = res < kPoissonTol && res_shift < kPoissonTol;
        all_ok = all_ok && ok;
        rows.add(std::to_string(i), "", res, kPoissonTol, res / kPoissonTol,
                 format_double(res_shift), ok);
    }
    verdicts.push_back({"poisson_residual", all_ok,
                        "tol=" + format_double(kPoissonTol) + " widths=" +
                            std::to_string(m.poisson_widths.size())});
}

void run_kato_ponce(const Manifest& m, RowBuilder& rows, std::vector<Verdict>& verdicts) {
    const Grid coarse = m.grid;
    const Grid fine(coarse.nx * 2, coarse.ny * 2, coarse.lx);
    const double max_xi = 0.25 * coarse.xi_max();
    const int max_n = std::max(2, coarse.ny / 8);
    const double sx = 0.5 * max_xi, sy = 0.5 * max_n;
    CounterRng base{m.seed};

    struct Cell {
        double change = 0.0, r_coarse = 0.0, r_fine = 0.0;
    };
    const int ns = static_cast<int>(m.kp_s.size());
    std::vector<Cell> cells(static_cast<std::size_t>(ns) * m.kp_pairs);

    parallel_for(ns * m.kp_pairs, [&](int idx) {
        const int si = idx / m.kp_pairs;
        const int pair = idx % m.kp_pairs;
        const double s = m.kp_s[si];
        const std::uint64_t fs = base.raw(2 * static_cast<std::uint64_t>(pair));
        const std::uint64_t gs = base.raw(2 * static_cast<std::uint64_t>(pair) + 1);

        auto make = [&](const Grid& g, std::uint64_t sd) {
            return fft::inverse(random_band_limited(g, sd, sx, sy, max_xi, max_n));
        };
        const double rc = kato_ponce_ratio(make(coarse, fs), make(coarse, gs), s);
        const double rf = kato_ponce_ratio(make(fine, fs), make(fine, gs), s);
        cells[idx] = {std::abs(rf - rc) / std::max(rc, 1e-300), rc, rf};
    });

    double worst_change = 0.0;
    bool all_ok = true;
    for (int si = 0; si < ns; ++si) {
        for (int pair = 0; pair < m.kp_pairs; ++pair) {
            const Cell& c = cells[static_cast<std::size_t>(si) * m.kp_pairs + pair];
            worst_change = std::max(worst_change, c.change);
            const bool ok = c.change <= kKatoPonceDoublingTol;
            all_ok = all_ok && ok;
            rows.add(std::to_string(pair), std::to_string(si), c.r_coarse, c.r_fine,
                     c.change, "", ok);
        }
    }

    // Degenerate cases: constant f, and f depending on x only.
    Field ones(coarse);
    for (double& v : ones.values()) v = 1.0;
    Field g_rand = fft::inverse(random_band_limited(coarse, base.raw(1 << 20), sx, sy,
                                                    max_xi, max_n));
    Field fx = fft::inverse(random_band_limited(coarse, base.raw((1 << 20) + 1), sx, sy,
                                                max_xi, 0));
    const double r_const = kato_ponce_ratio(ones, g_rand, m.kp_s.front());
    const double r_xonly = kato_ponce_ratio(fx, g_rand, m.kp_s.front());

    verdicts.push_back({"doubling_stability", all_ok,
                        "max_rel_change=" + format_double(worst_change) + " tol=" +
                            format_double(kKatoPonceDoublingTol)});
    verdicts.push_back({"constant_f_zero", r_const < kDegenerateTol,
                        "ratio=" + format_double(r_const)});
    verdicts.push_back({"x_only_f_zero", r_xonly < kDegenerateTol,
                        "ratio=" + format_double(r_xonly)});
}

void run_cont_dep(const Manifest& m, RowBuilder& rows, std::vector<Verdict>& verdicts) {
    const Field phi = gaussian_bump(m.grid, m.data_amp, m.data_wx, m.data_wy);
    std::vector<double> deltas{0.0};
    for (double d : m.cd_deltas)
        if (d > 0.0) deltas.push_back(d);

    const auto table = continuous_dependence(phi, deltas, m.params, m.solver, m.cd_s, m.seed);

    bool statuses_ok = true;
    for (std::size_t i = 0; i < table.size(); ++i) {
        const auto& row = table[i];
        statuses_ok = statuses_ok && row.status == RunStatus::ok;
        const double ratio = row.delta > 0.0 ? row.dist_hs / row.delta : 0.0;
        rows.add(std::to_string(i), "", row.dist_hs, row.dist_l2, ratio, "",
                 row.status == RunStatus::ok);
    }

    const bool zero_ok = table[0].dist_l2 == 0.0 && table[0].dist_hs == 0.0;

    double rmin = std::numeric_limits<double>::infinity(), rmax = 0.0;
    double lmin = std::numeric_limits<double>::infinity(), lmax = 0.0;
    for (std::size_t i = 1; i < table.size(); ++i) {
        rmin = std::min(rmin, table[i].dist_hs / table[i].delta);
        rmax = std::max(rmax, table[i].dist_hs / table[i].delta);
        lmin = std::min(lmin, table[i].dist_l2 / table[i].delta);
        lmax = std::max(lmax, table[i].dist_l2 / table[i].delta);
    }
    const bool stable = table.size() < 2 ||
                        (rmax <= kContDepFactor * rmin && lmax <= kContDepFactor * lmin);

    verdicts.push_back({"delta_zero_exact", zero_ok,
                        "dist_l2=" + format_double(table[0].dist_l2) + " dist_hs=" +
                            format_double(table[0].dist_hs)});
    verdicts.push_back(
        {"ratio_stability", stable,
         "dist_hs/delta in [" + format_double(rmin) + "," + format_double(rmax) +
             "], dist_l2/delta in [" + format_double(lmin) + "," + format_double(lmax) +
             "], factor=" + format_double(kContDepFactor)});
    verdicts.push_back({"run_statuses", statuses_ok, statuses_ok ? "all ok" : "sentinel hit"});
}

void run_energy_check(const Manifest& m, RowBuilder& rows, std::vector<Verdict>& verdicts) {
    const Field phi = gaussian_bump(m.grid, m.data_amp, m.data_wx, m.data_wy);
    const double phi_norm = sobolev_norm(fft::forward(phi), m.ec_s);
    const Trajectory traj = evolve(phi, m.params, m.solver);
    write_ledger(m.output_dir, run_id(m), traj);

    const double ratio = energy_estimate_check(traj, m.ec_s, phi_norm);
    const bool bound_ok = ratio <= kEnergyRatioBound && traj.status == RunStatus::ok;
    rows.add("0", "", ratio, kEnergyRatioBound, ratio / kEnergyRatioBound, "", bound_ok);
    verdicts.push_back({"energy_estimate_ratio", bound_ok,
                        "ratio=" + format_double(ratio) + " bound=" +
                            format_double(kEnergyRatioBound) + " g=" +
                            format_double(g_functional(traj))});

    if (m.solver.linear_only) {
        // W0 is an isometry of every spectral norm, so the ratio must equal
        // e^{-g(T)} to round-off.
        const double expected = std::exp(-g_functional(traj));
        const double dev = std::abs(ratio - expected) / expected;
        verdicts.push_back({"linear_isometry", dev <= 1e-12,
                            "ratio=" + format_double(ratio) + " expected=" +
                                format_double(expected) + " rel_dev=" + format_double(dev)});
    }
}

} // namespace

int worker_count() {
    if (const char* env = std::getenv("DZK_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

RunResult run_manifest(const Manifest& m) {
    fs::create_directories(m.output_dir);

    RowBuilder rows(m);
    RunResult result;

    switch (m.experiment) {
        case ExperimentKind::evolve: run_evolve(m, rows, result.verdicts); break;
        case ExperimentKind::strichartz: run_strichartz(m, rows, result.verdicts); break;
        case ExperimentKind::vdc: run_vdc(m, rows, result.verdicts); break;
        case ExperimentKind::kernel_h: run_kernel_h(m, rows, result.verdicts); break;
        case ExperimentKind::poisson: run_poisson(m, rows, result.verdicts); break;
        case ExperimentKind::kato_ponce: run_kato_ponce(m, rows, result.verdicts); break;
        case ExperimentKind::cont_dep: run_cont_dep(m, rows, result.verdicts); break;
        case ExperimentKind::energy_check: run_energy_check(m, rows, result.verdicts); break;
    }

    // Rows are generated in key order already; sort anyway so aggregation is
    // order-independent.
    std::stable_sort(rows.table.rows.begin(), rows.table.rows.end(),
                     [](const auto& a, const auto& b) {
                         auto num = [](const std::string& s) {
                             return s.empty() ? -1.0 : std::strtod(s.c_str(), nullptr);
                         };
                         if (a[4] != b[4]) return num(a[4]) < num(b[4]);
                         return num(a[5]) < num(b[5]);
                     });
    csv::write(m.output_dir / "results.csv", rows.table);

    std::ofstream summary(m.output_dir / "summary.txt", std::ios::binary);
    summary << "run: " << run_id(m) << "\n"
            << "experiment: " << to_string(m.experiment) << "\n"
            << "alpha: " << format_double(m.params.alpha)
            << " beta: " << format_double(m.params.beta) << " sign: " << m.params.sign
            << " seed: " << m.seed << "\n"
            << "status: " << (result.ok() ? "PASS" : "FAIL") << "\n";
    for (const auto& v : result.verdicts)
        summary << "assert " << (v.pass ? "PASS" : "FAIL") << " " << v.name << " "
                << v.detail << "\n";
    summary.close();

    result.results = std::move(rows.table);
    return result;
}

int report(const std::filesystem::path& dir, std::ostream& out) {
    if (!fs::exists(dir)) {
        out << "report: directory does not exist: " << dir.string() << "\n";
        return 2;
    }
    std::vector<fs::path> summaries;
    for (const auto& entry : fs::recursive_directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().filename() == "summary.txt")
            summaries.push_back(entry.path());
    std::sort(summaries.begin(), summaries.end());

    if (summaries.empty()) {
        out << "report: no run summaries found under " << dir.string() << "\n";
        return 2;
    }

    int exit_code = 0;
    for (const auto& path : summaries) {
        out << "== " << path.parent_path().string() << "\n";
        std::ifstream in(path);
        std::string line;
        while (std::getline(in, line)) {
            out << line << "\n";
            if (line.rfind("status: FAIL", 0) == 0 || line.rfind("assert FAIL", 0) == 0)
                exit_code = 1;
        }
        out << "\n";
    }
    return exit_code;
}

} // namespace dzk
