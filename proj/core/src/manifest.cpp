#include "dzk/manifest.hpp"

#include <fstream>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace dzk {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& reason) {
    throw std::invalid_argument("manifest: field '" + field + "': " + reason);
}

void require_keys(const json& obj, const std::string& where,
                  const std::set<std::string>& allowed) {
    if (!obj.is_object()) fail(where, "must be a JSON object");
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key())) fail(where + "." + it.key(), "unknown key");
}

double get_number(const json& obj, const std::string& where, const std::string& key) {
    if (!obj.contains(key)) fail(where + "." + key, "missing required field");
    if (!obj[key].is_number()) fail(where + "." + key, "must be a number");
    return obj[key].get<double>();
}

double get_number_or(const json& obj, const std::string& where, const std::string& key,
                     double fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_number()) fail(where + "." + key, "must be a number");
    return obj[key].get<double>();
}

int get_int(const json& obj, const std::string& where, const std::string& key) {
    if (!obj.contains(key)) fail(where + "." + key, "missing required field");
    if (!obj[key].is_number_integer()) fail(where + "." + key, "must be an integer");
    return obj[key].get<int>();
}

int get_int_or(const json& obj, const std::string& where, const std::string& key,
               int fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_number_integer()) fail(where + "." + key, "must be an integer");
    return obj[key].get<int>();
}

std::vector<int> get_int_list(const json& obj, const std::string& where,
                              const std::string& key, std::vector<int> fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_array()) fail(where + "." + key, "must be an array of integers");
    std::vector<int> out;
    for (const auto& v : obj[key]) {
        if (!v.is_number_integer()) fail(where + "." + key, "must be an array of integers");
        out.push_back(v.get<int>());
    }
    if (out.empty()) fail(where + "." + key, "must be non-empty");
    return out;
}

std::vector<double> get_num_list(const json& obj, const std::string& where,
                                 const std::string& key, std::vector<double> fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_array()) fail(where + "." + key, "must be an array of numbers");
    std::vector<double> out;
    for (const auto& v : obj[key]) {
        if (!v.is_number()) fail(where + "." + key, "must be an array of numbers");
        out.push_back(v.get<double>());
    }
    if (out.empty()) fail(where + "." + key, "must be non-empty");
    return out;
}

DispersionParams parse_params(const json& obj) {
    require_keys(obj, "params", {"alpha", "beta", "sign"});
    const double alpha = get_number(obj, "params", "alpha");
    const double beta = get_number(obj, "params", "beta");
    const int sign = get_int(obj, "params", "sign");
    if (!(alpha > -1.0)) fail("params.alpha", "parameter domain requires alpha > -1");
    if (!(beta >= 1.0)) fail("params.beta", "parameter domain requires beta >= 1");
    if (sign != 1 && sign != -1) fail("params.sign", "must be +1 or -1");
    return DispersionParams(alpha, beta, sign);
}

Grid parse_grid(const json& obj) {
    require_keys(obj, "grid", {"nx", "ny", "lx", "lx_over_pi"});
    const int nx = get_int(obj, "grid", "nx");
    const int ny = get_int(obj, "grid", "ny");
    if (obj.contains("lx") == obj.contains("lx_over_pi"))
        fail("grid", "exactly one of lx / lx_over_pi is required");
    const double lx = obj.contains("lx")
                          ? get_number(obj, "grid", "lx")
                          : get_number(obj, "grid", "lx_over_pi") * std::numbers::pi;
    try {
        return Grid(nx, ny, lx);
    } catch (const std::exception& e) {
        fail("grid", e.what());
    }
}

SolverConfig parse_solver(const json& obj) {
    require_keys(obj, "solver",
                 {"dt", "t_final", "dealias", "cfl_safety", "snapshot_stride",
                  "linear_only"});
    SolverConfig cfg;
    cfg.dt = get_number(obj, "solver", "dt");
    cfg.t_final = get_number(obj, "solver", "t_final");
    cfg.dealias = get_number_or(obj, "solver", "dealias", cfg.dealias);
    cfg.cfl_safety = get_number_or(obj, "solver", "cfl_safety", cfg.cfl_safety);
    cfg.snapshot_stride = get_int_or(obj, "solver", "snapshot_stride", cfg.snapshot_stride);
    if (obj.contains("linear_only")) {
        if (!obj["linear_only"].is_boolean()) fail("solver.linear_only", "must be a boolean");
        cfg.linear_only = obj["linear_only"].get<bool>();
    }
    try {
        cfg.validate();
    } catch (const std::exception& e) {
        fail("solver", e.what());
    }
    return cfg;
}

} // namespace

const char* to_string(ExperimentKind k) {
    switch (k) {
        case ExperimentKind::evolve: return "evolve";
        case ExperimentKind::strichartz: return "strichartz";
        case ExperimentKind::vdc: return "vdc";
        case ExperimentKind::kernel_h: return "kernel_h";
        case ExperimentKind::poisson: return "poisson";
        case ExperimentKind::kato_ponce: return "kato_ponce";
        case ExperimentKind::cont_dep: return "cont_dep";
        case ExperimentKind::energy_check: return "energy_check";
    }
    return "unknown";
}

Manifest Manifest::from_json_text(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("manifest: JSON parse error: ") + e.what());
    }

    require_keys(root, "manifest",
                 {"experiment", "params", "grid", "solver", "seed", "output_dir", "data",
                  "strichartz", "vdc", "kernel_h", "poisson", "kato_ponce", "cont_dep",
                  "energy_check"});

    Manifest m;
    if (!root.contains("experiment")) fail("experiment", "missing required field");
    const std::string kind = root["experiment"].is_string()
                                 ? root["experiment"].get<std::string>()
                                 : "";
    bool found = false;
    for (ExperimentKind k :
         {ExperimentKind::evolve, ExperimentKind::strichartz, ExperimentKind::vdc,
          ExperimentKind::kernel_h, ExperimentKind::poisson, ExperimentKind::kato_ponce,
          ExperimentKind::cont_dep, ExperimentKind::energy_check}) {
        if (kind == to_string(k)) {
            m.experiment = k;
            found = true;
            break;
        }
    }
    if (!found)
        fail("experiment",
             "must be one of evolve|strichartz|vdc|kernel_h|poisson|kato_ponce|cont_dep|"
             "energy_check");

    if (!root.contains("params")) fail("params", "missing required field");
    m.params = parse_params(root["params"]);

    if (!root.contains("output_dir")) fail("output_dir", "missing required field");
    if (!root["output_dir"].is_string()) fail("output_dir", "must be a string path");
    m.output_dir = root["output_dir"].get<std::string>();

    if (root.contains("seed")) {
        if (!root["seed"].is_number_unsigned() && !root["seed"].is_number_integer())
            fail("seed", "must be a non-negative integer");
        m.seed = root["seed"].get<std::uint64_t>();
    }

    const bool needs_grid = m.experiment == ExperimentKind::evolve ||
                            m.experiment == ExperimentKind::strichartz ||
                            m.experiment == ExperimentKind::kato_ponce ||
                            m.experiment == ExperimentKind::cont_dep ||
                            m.experiment == ExperimentKind::energy_check;
    const bool needs_solver = m.experiment == ExperimentKind::evolve ||
                              m.experiment == ExperimentKind::cont_dep ||
                              m.experiment == ExperimentKind::energy_check;

    if (needs_grid) {
        if (!root.contains("grid")) fail("grid", "missing required field");
        m.grid = parse_grid(root["grid"]);
        m.has_grid = true;
    } else if (root.contains("grid")) {
        fail("grid", std::string("not used by experiment '") + to_string(m.experiment) + "'");
    }

    if (needs_solver) {
        if (!root.contains("solver")) fail("solver", "missing required field");
        m.solver = parse_solver(root["solver"]);
    } else if (root.contains("solver")) {
        fail("solver", std::string("not used by experiment '") + to_string(m.experiment) + "'");
    }

    const bool uses_data = needs_solver;
    if (root.contains("data")) {
        if (!uses_data)
            fail("data", std::string("not used by experiment '") + to_string(m.experiment) + "'");
        const json& d = root["data"];
        require_keys(d, "data", {"amp", "wx", "wy"});
        m.data_amp = get_number_or(d, "data", "amp", m.data_amp);
        m.data_wx = get_number_or(d, "data", "wx", m.data_wx);
        m.data_wy = get_number_or(d, "data", "wy", m.data_wy);
        if (!(m.data_amp > 0.0)) fail("data.amp", "must be positive");
        if (!(m.data_wx > 0.0) || !(m.data_wy > 0.0)) fail("data.wx/wy", "must be positive");
    }

    auto check_block = [&](const char* name, ExperimentKind k) {
        if (root.contains(name) && m.experiment != k)
            fail(name, std::string("only valid for experiment '") + to_string(k) + "'");
    };
    check_block("strichartz", ExperimentKind::strichartz);
    check_block("vdc", ExperimentKind::vdc);
    check_block("kernel_h", ExperimentKind::kernel_h);
    check_block("poisson", ExperimentKind::poisson);
    check_block("kato_ponce", ExperimentKind::kato_ponce);
    check_block("cont_dep", ExperimentKind::cont_dep);
    check_block("energy_check", ExperimentKind::energy_check);

    if (root.contains("strichartz")) {
        const json& b = root["strichartz"];
        require_keys(b, "strichartz", {"k", "j", "data_kind"});
        m.st_k = get_int_list(b, "strichartz", "k", m.st_k);
        m.st_j = get_int_list(b, "strichartz", "j", m.st_j);
        for (int k : m.st_k)
            if (k < 0) fail("strichartz.k", "entries must be >= 0");
        for (int j : m.st_j)
            if (j < 1) fail("strichartz.j", "entries must be >= 1");
        if (b.contains("data_kind")) {
            const std::string dk = b["data_kind"].is_string()
                                       ? b["data_kind"].get<std::string>()
                                       : "";
            if (dk == "flat") m.st_data_kind = BlockDataKind::flat;
            else if (dk == "random_phase") m.st_data_kind = BlockDataKind::random_phase;
            else fail("strichartz.data_kind", "must be 'flat' or 'random_phase'");
        }
    }

    if (root.contains("vdc")) {
        const json& b = root["vdc"];
        require_keys(b, "vdc", {"j", "l_span", "x_samples"});
        m.vdc_j = get_int_list(b, "vdc", "j", m.vdc_j);
        for (int j : m.vdc_j)
            if (j < 1) fail("vdc.j", "entries must be >= 1");
        m.vdc_l_span = get_int_or(b, "vdc", "l_span", m.vdc_l_span);
        if (m.vdc_l_span < 0) fail("vdc.l_span", "must be >= 0");
        m.vdc_x_samples = get_int_or(b, "vdc", "x_samples", m.vdc_x_samples);
        if (m.vdc_x_samples < 2) fail("vdc.x_samples", "must be >= 2");
    }

    if (root.contains("kernel_h")) {
        const json& b = root["kernel_h"];
        require_keys(b, "kernel_h", {"eta_max", "eta_step"});
        m.h_eta_max = get_number_or(b, "kernel_h", "eta_max", m.h_eta_max);
        m.h_eta_step = get_number_or(b, "kernel_h", "eta_step", m.h_eta_step);
        if (!(m.h_eta_max > 0.0)) fail("kernel_h.eta_max", "must be positive");
        if (!(m.h_eta_step > 0.0)) fail("kernel_h.eta_step", "must be positive");
    }

    if (root.contains("poisson")) {
        const json& b = root["poisson"];
        require_keys(b, "poisson", {"widths", "trunc"});
        m.poisson_widths = get_num_list(b, "poisson", "widths", m.poisson_widths);
        for (double w : m.poisson_widths)
            if (!(w > 0.0)) fail("poisson.widths", "entries must be positive");
        m.poisson_trunc = get_int_or(b, "poisson", "trunc", m.poisson_trunc);
        if (m.poisson_trunc < 1) fail("poisson.trunc", "must be >= 1");
    }

    if (root.contains("kato_ponce")) {
        const json& b = root["kato_ponce"];
        require_keys(b, "kato_ponce", {"pairs", "s"});
        m.kp_pairs = get_int_or(b, "kato_ponce", "pairs", m.kp_pairs);
        if (m.kp_pairs < 1) fail("kato_ponce.pairs", "must be >= 1");
        m.kp_s = get_num_list(b, "kato_ponce", "s", m.kp_s);
        for (double s : m.kp_s)
            if (!(s >= 1.0)) fail("kato_ponce.s", "entries must be >= 1");
    }

    if (root.contains("cont_dep")) {
        const json& b = root["cont_dep"];
        require_keys(b, "cont_dep", {"deltas", "s"});
        m.cd_deltas = get_num_list(b, "cont_dep", "deltas", m.cd_deltas);
        for (double d : m.cd_deltas)
            if (d < 0.0) fail("cont_dep.deltas", "entries must be >= 0");
        m.cd_s = get_number_or(b, "cont_dep", "s", m.cd_s);
    }

    if (root.contains("energy_check")) {
        const json& b = root["energy_check"];
        require_keys(b, "energy_check", {"s"});
        m.ec_s = get_number_or(b, "energy_check", "s", m.ec_s);
        if (!(m.ec_s >= 1.0)) fail("energy_check.s", "must be >= 1");
    }

    return m;
}

Manifest Manifest::from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("manifest: cannot open " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

std::string Manifest::schema() {
    return R"(Manifest schema (JSON object):
  experiment   string, required: evolve | strichartz | vdc | kernel_h |
               poisson | kato_ponce | cont_dep | energy_check
  params       object, required: {alpha: number > -1, beta: number >= 1,
               sign: +1 | -1}
  output_dir   string, required: directory for results.csv, summary.txt and
               any snapshots (created if missing)
  seed         unsigned integer, optional (default 0): counter-based
               splitmix64 seed; fixes every random draw
  grid         object: {nx, ny: powers of two >= 4, and exactly one of
               lx (absolute) | lx_over_pi}; required by evolve, strichartz,
               kato_ponce, cont_dep, energy_check
  solver       object: {dt > 0, t_final > 0, dealias (0,1] default 2/3,
               cfl_safety (0,1] default 0.5, snapshot_stride >= 1 default 50,
               linear_only bool default false}; required by evolve, cont_dep,
               energy_check
  data         object, optional: {amp > 0 default 0.5, wx > 0 default 4,
               wy > 0 default 1.2} Gaussian initial data (evolve family)
  strichartz   object, optional: {k: [int >= 0], j: [int >= 1],
               data_kind: flat | random_phase}
  vdc          object, optional: {j: [int >= 1], l_span >= 0 (l = j..j+span),
               x_samples >= 2}
  kernel_h     object, optional: {eta_max > 0, eta_step > 0}
  poisson      object, optional: {widths: [number > 0], trunc >= 1}
  kato_ponce   object, optional: {pairs >= 1, s: [number >= 1]}
  cont_dep     object, optional: {deltas: [number >= 0], s}
  energy_check object, optional: {s >= 1}
Unknown keys anywhere are rejected. Identical manifests produce byte-identical
CSV outputs on the same platform.
)";
}

} // namespace dzk
