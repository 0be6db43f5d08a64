#include "cli/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace andreev::cli {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& why) {
    throw ConfigError(field + ": " + why);
}

const json& need(const json& obj, const std::string& key,
                 const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(path + key, "required field is missing");
    return *it;
}

double as_number(const json& v, const std::string& field) {
    if (!v.is_number()) fail(field, "must be a number");
    double d = v.get<double>();
    if (!std::isfinite(d)) fail(field, "must be finite");
    return d;
}

double need_number(const json& obj, const std::string& key,
                   const std::string& path) {
    return as_number(need(obj, key, path), path + key);
}

double opt_number(const json& obj, const std::string& key,
                  const std::string& path, double fallback) {
    auto it = obj.find(key);
    return it == obj.end() ? fallback : as_number(*it, path + key);
}

bool opt_bool(const json& obj, const std::string& key, const std::string& path,
              bool fallback) {
    auto it = obj.find(key);
    if (it == obj.end()) return fallback;
    if (!it->is_boolean()) fail(path + key, "must be a boolean");
    return it->get<bool>();
}

std::string need_string(const json& obj, const std::string& key,
                        const std::string& path) {
    const json& v = need(obj, key, path);
    if (!v.is_string()) fail(path + key, "must be a string");
    return v.get<std::string>();
}

std::vector<double> number_list(const json& v, const std::string& field) {
    if (!v.is_array()) fail(field, "must be an array of numbers");
    std::vector<double> out;
    out.reserve(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        out.push_back(as_number(v[i], field + "[" + std::to_string(i) + "]"));
    return out;
}

} // namespace

RunConfig parse_config(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("document: ") + e.what());
    }
    if (!root.is_object()) fail("document", "top level must be a JSON object");

    RunConfig c;

    // units block: mandatory and explicit, no silent defaults
    const json& units = need(root, "units", "");
    if (!units.is_object()) fail("units", "must be an object");
    c.energy_unit = need_string(units, "energy", "units.");
    c.length_unit = need_string(units, "length", "units.");
    if (c.energy_unit != "absolute" && c.energy_unit != "delta0")
        fail("units.energy", "must be \"absolute\" or \"delta0\" (got \"" +
                                 c.energy_unit + "\")");
    if (c.length_unit != "absolute")
        fail("units.length", "only \"absolute\" is supported (got \"" +
                                 c.length_unit + "\")");

    const json& prof = need(root, "profile", "");
    if (!prof.is_object()) fail("profile", "must be an object");
    c.profile.delta0 = need_number(prof, "delta0", "profile.");
    c.profile.mu0 = need_number(prof, "mu0", "profile.");
    c.profile.x1 = need_number(prof, "x1", "profile.");
    c.profile.x2 = need_number(prof, "x2", "profile.");
    c.profile.lead_half_length =
        opt_number(prof, "lead_half_length", "profile.",
                   0.5 * (c.profile.x1 + c.profile.x2));
    if (auto it = prof.find("ramp"); it != prof.end()) {
        if (!it->is_string()) fail("profile.ramp", "must be a string");
        c.profile.ramp = it->get<std::string>();
    }
    if (c.profile.ramp != "quintic" && c.profile.ramp != "linear")
        fail("profile.ramp",
             "must be \"quintic\" or \"linear\" (got \"" + c.profile.ramp + "\")");
    if (!(c.profile.delta0 > 0.0)) fail("profile.delta0", "must be > 0");
    if (!(c.profile.mu0 > c.profile.delta0))
        fail("profile.mu0", "must exceed profile.delta0");
    if (!(c.profile.x1 > 0.0)) fail("profile.x1", "must be > 0");
    if (!(c.profile.x2 > c.profile.x1)) fail("profile.x2", "must exceed profile.x1");
    if (!(c.profile.lead_half_length > c.profile.x1 &&
          c.profile.lead_half_length < c.profile.x2))
        fail("profile.lead_half_length", "must lie strictly between x1 and x2");

    double escale = (c.energy_unit == "delta0") ? c.profile.delta0 : 1.0;

    if (auto it = root.find("h_list"); it != root.end()) {
        c.h_list = number_list(*it, "h_list");
        for (size_t i = 0; i < c.h_list.size(); ++i)
            if (!(c.h_list[i] > 0.0))
                fail("h_list[" + std::to_string(i) + "]",
                     "must be > 0 (got " + std::to_string(c.h_list[i]) + ")");
    }
    if (auto it = root.find("phi_list"); it != root.end())
        c.phi_list = number_list(*it, "phi_list");

    if (auto it = root.find("window"); it != root.end()) {
        std::vector<double> w = number_list(*it, "window");
        if (w.size() != 2) fail("window", "must be [lo, hi]");
        if (!(w[0] < w[1])) fail("window", "lo must be < hi");
        c.window = {w[0] * escale, w[1] * escale};
        c.has_window = true;
    }

    if (auto it = root.find("methods"); it != root.end()) {
        if (!it->is_object()) fail("methods", "must be an object");
        c.methods.bohr_sommerfeld =
            opt_bool(*it, "bohr_sommerfeld", "methods.", c.methods.bohr_sommerfeld);
        c.methods.hard_wall = opt_bool(*it, "hard_wall", "methods.", c.methods.hard_wall);
        c.methods.direct = opt_bool(*it, "direct", "methods.", c.methods.direct);
        c.methods.resonances =
            opt_bool(*it, "resonances", "methods.", c.methods.resonances);
    }

    if (auto it = root.find("grid"); it != root.end()) {
        if (!it->is_object()) fail("grid", "must be an object");
        c.grid_X = need_number(*it, "X", "grid.");
        const json& n = need(*it, "N", "grid.");
        if (!n.is_number_integer()) fail("grid.N", "must be an integer");
        c.grid_N = n.get<int>();
        if (!(c.grid_X > c.profile.x2))
            fail("grid.X", "must exceed profile.x2 (the box must contain the junction)");
        if (c.grid_N < 500) fail("grid.N", "must be >= 500");
        c.has_grid = true;
    }

    if (auto it = root.find("theta_list"); it != root.end()) {
        c.theta_list = number_list(*it, "theta_list");
        if (c.theta_list.empty()) fail("theta_list", "must not be empty");
        for (size_t i = 0; i < c.theta_list.size(); ++i)
            if (c.theta_list[i] < 0.05 || c.theta_list[i] > 0.3)
                fail("theta_list[" + std::to_string(i) + "]",
                     "must lie in [0.05, 0.3]");
    }

    if (auto it = root.find("tolerances"); it != root.end()) {
        if (!it->is_object()) fail("tolerances", "must be an object");
        c.tol_root = opt_number(*it, "tol_root", "tolerances.", c.tol_root);
        c.tol_quad = opt_number(*it, "tol_quad", "tolerances.", c.tol_quad);
        if (!(c.tol_root > 0.0)) fail("tolerances.tol_root", "must be > 0");
        if (!(c.tol_quad > 0.0)) fail("tolerances.tol_quad", "must be > 0");
    }

    if (auto it = root.find("compare"); it != root.end()) {
        if (!it->is_object()) fail("compare", "must be an object");
        c.compare.direct_tol =
            opt_number(*it, "direct_tol", "compare.", c.compare.direct_tol) * escale;
        c.compare.hard_wall_tol =
            opt_number(*it, "hard_wall_tol", "compare.", c.compare.hard_wall_tol) *
            escale;
        c.compare.require_monotone_h = opt_bool(*it, "require_monotone_h",
                                                "compare.", false);
        if (!(c.compare.direct_tol > 0.0)) fail("compare.direct_tol", "must be > 0");
        if (!(c.compare.hard_wall_tol > 0.0))
            fail("compare.hard_wall_tol", "must be > 0");
    } else {
        c.compare.direct_tol *= escale;
        c.compare.hard_wall_tol *= escale;
    }

    if (auto it = root.find("table_d"); it != root.end()) {
        if (!it->is_object()) fail("table_d", "must be an object");
        if (auto nu = it->find("nu_list"); nu != it->end()) {
            c.table_d.nu_list = number_list(*nu, "table_d.nu_list");
            if (c.table_d.nu_list.empty()) fail("table_d.nu_list", "must not be empty");
        }
        c.table_d.z_min = opt_number(*it, "z_min", "table_d.", c.table_d.z_min);
        c.table_d.z_max = opt_number(*it, "z_max", "table_d.", c.table_d.z_max);
        c.table_d.z_imag = opt_number(*it, "z_imag", "table_d.", c.table_d.z_imag);
        if (auto n = it->find("z_count"); n != it->end()) {
            if (!n->is_number_integer()) fail("table_d.z_count", "must be an integer");
            c.table_d.z_count = n->get<int>();
        }
        if (!(c.table_d.z_min <= c.table_d.z_max))
            fail("table_d.z_min", "must be <= table_d.z_max");
        if (c.table_d.z_count < 1) fail("table_d.z_count", "must be >= 1");
    }

    return c;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config file not readable: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

} // namespace andreev::cli
