#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace andreev::cli {

// Thrown with a field-level message, e.g. "h_list[2]: must be > 0 (got -1)".
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ProfileParams {
    double delta0 = 1.0;
    double mu0 = 4.0;
    double x1 = 0.5;
    double x2 = 1.5;
    double lead_half_length = 0.0; // 0 means (x1 + x2) / 2, resolved at load
    std::string ramp = "quintic";  // "quintic" | "linear"
};

struct Methods {
    bool bohr_sommerfeld = true;
    bool hard_wall = false;
    bool direct = false;
    bool resonances = false;
};

struct CompareThresholds {
    double direct_tol = 0.01;    // |E_bs - E_direct| ceiling, energy units
    double hard_wall_tol = 0.05; // |E_hw - E_bs| ceiling, energy units
    bool require_monotone_h = false;
};

struct TableD {
    std::vector<double> nu_list{-2.5, -0.5, 0.3, 1.7};
    double z_min = -5.0;
    double z_max = 5.0;
    int z_count = 101;
    double z_imag = 0.0;
};

// One JSON document per run.  The units block is mandatory: energies are
// either "absolute" or "delta0" (scaled by profile.delta0 at load time so
// everything downstream sees absolute numbers); lengths are "absolute".
struct RunConfig {
    std::string energy_unit = "absolute";
    std::string length_unit = "absolute";
    ProfileParams profile;
    std::vector<double> h_list;
    std::vector<double> phi_list;
    std::pair<double, double> window{0.0, 0.0};
    bool has_window = false;
    Methods methods;
    double grid_X = 0.0;
    int grid_N = 0;
    bool has_grid = false;
    std::vector<double> theta_list{0.10};
    double tol_root = 1e-12;
    double tol_quad = 1e-12;
    CompareThresholds compare;
    TableD table_d;
};

RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::string& path);

} // namespace andreev::cli
