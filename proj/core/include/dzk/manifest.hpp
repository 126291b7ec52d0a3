#ifndef DZK_MANIFEST_HPP
#define DZK_MANIFEST_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "dzk/dispersion.hpp"
#include "dzk/estimates.hpp"
#include "dzk/grid.hpp"
#include "dzk/solver.hpp"

namespace dzk {

enum class ExperimentKind {
    evolve,
    strichartz,
    vdc,
    kernel_h,
    poisson,
    kato_ponce,
    cont_dep,
    energy_check,
};

const char* to_string(ExperimentKind k);

// A manifest fully determines a run: identical manifests produce identical
// output bytes on one platform. Validation is total (every field checked,
// unknown keys rejected) before any computation starts.
struct Manifest {
    ExperimentKind experiment = ExperimentKind::evolve;
    DispersionParams params;
    Grid grid;
    bool has_grid = false;
    SolverConfig solver;
    std::uint64_t seed = 0;
    std::filesystem::path output_dir;

    // Initial data (evolve / cont_dep / energy_check): Gaussian bump scaled
    // to peak `amp`, x width wx, periodized y width wy.
    double data_amp = 0.5;
    double data_wx = 4.0;
    double data_wy = 1.2;

    // strichartz
    std::vector<int> st_k{0};
    std::vector<int> st_j{4, 5, 6, 7, 8};
    BlockDataKind st_data_kind = BlockDataKind::flat;

    // vdc
    std::vector<int> vdc_j{4, 5, 6, 7};
    int vdc_l_span = 6;
    int vdc_x_samples = 256;

    // kernel_h
    double h_eta_max = 50.0;
    double h_eta_step = 0.5;

    // poisson
    std::vector<double> poisson_widths{1.0, 10.0};
    int poisson_trunc = 64;

    // kato_ponce
    int kp_pairs = 100;
    std::vector<double> kp_s{1.0, 2.0, 2.5};

    // cont_dep
    std::vector<double> cd_deltas{1e-2, 5e-3, 2.5e-3};
    double cd_s = 2.0;

    // energy_check
    double ec_s = 2.0;

    static Manifest from_json_text(const std::string& text);
    static Manifest from_file(const std::filesystem::path& path);

    // Human-readable schema, printed by `dzk schema`.
    static std::string schema();
};

} // namespace dzk

#endif
