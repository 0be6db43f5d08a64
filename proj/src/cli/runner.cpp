#include "cli/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <thread>
#include <vector>

#include "andreev.h"

namespace andreev::cli {

namespace {

[[noreturn]] void die(const std::string& msg) { throw ConfigError(msg); }

[[noreturn]] void die_api(const std::string& where) {
    die(where + ": " + abdg_last_error());
}

// RAII over the opaque C handle; one per (profile params, phi) pair.
class Handle {
public:
    Handle(const ProfileParams& pp, double phi) {
        abdg_ramp r = (pp.ramp == "linear") ? ABDG_RAMP_LINEAR : ABDG_RAMP_QUINTIC;
        if (abdg_profile_create(pp.delta0, pp.mu0, phi, pp.x1, pp.x2,
                                pp.lead_half_length, r, &p_) != ABDG_OK)
            die_api("profile");
    }
    ~Handle() { abdg_profile_destroy(p_); }
    Handle(const Handle&) = delete;
    Handle& operator=(const Handle&) = delete;
    const abdg_profile* get() const { return p_; }

private:
    abdg_profile* p_ = nullptr;
};

std::vector<abdg_level> fetch_semiclassical(const Handle& p, double h,
                                            std::pair<double, double> w) {
    size_t count = 0;
    abdg_status s =
        abdg_semiclassical_levels(p.get(), h, w.first, w.second, nullptr, 0, &count);
    if (s != ABDG_OK && s != ABDG_BUFFER_TOO_SMALL) die_api("semiclassical levels");
    std::vector<abdg_level> buf(count);
    if (count > 0) {
        if (abdg_semiclassical_levels(p.get(), h, w.first, w.second, buf.data(),
                                      buf.size(), &count) != ABDG_OK)
            die_api("semiclassical levels");
    }
    return buf;
}

std::vector<abdg_level> fetch_hard_wall(const ProfileParams& pp, double phi,
                                        double h, std::pair<double, double> w) {
    size_t count = 0;
    abdg_status s =
        abdg_hard_wall_levels(pp.delta0, pp.mu0, phi, pp.lead_half_length, h,
                              w.first, w.second, nullptr, 0, &count);
    if (s != ABDG_OK && s != ABDG_BUFFER_TOO_SMALL) die_api("hard-wall levels");
    std::vector<abdg_level> buf(count);
    if (count > 0) {
        if (abdg_hard_wall_levels(pp.delta0, pp.mu0, phi, pp.lead_half_length, h,
                                  w.first, w.second, buf.data(), buf.size(),
                                  &count) != ABDG_OK)
            die_api("hard-wall levels");
    }
    return buf;
}

std::vector<abdg_bound_state> fetch_bound_states(const Handle& p, double h,
                                                 double X, int N,
                                                 std::pair<double, double> w) {
    size_t count = 0;
    abdg_status s =
        abdg_bound_states(p.get(), h, X, N, w.first, w.second, nullptr, 0, &count);
    if (s != ABDG_OK && s != ABDG_BUFFER_TOO_SMALL) die_api("bound states");
    std::vector<abdg_bound_state> buf(count);
    if (count > 0) {
        if (abdg_bound_states(p.get(), h, X, N, w.first, w.second, buf.data(),
                              buf.size(), &count) != ABDG_OK)
            die_api("bound states");
    }
    return buf;
}

// Index-addressed work queue; slot ownership makes the output independent
// of scheduling, so any worker count produces identical files.
void run_parallel(size_t n, int jobs, const std::function<void(size_t)>& body) {
    jobs = std::max(1, jobs);
    size_t nt = std::min<size_t>(static_cast<size_t>(jobs), n);
    if (nt <= 1) {
        for (size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::string> errors(n);
    std::vector<std::thread> pool;
    pool.reserve(nt);
    for (size_t t = 0; t < nt; ++t)
        pool.emplace_back([&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    body(i);
                } catch (const std::exception& e) {
                    errors[i] = e.what();
                } catch (...) {
                    errors[i] = "unknown failure";
                }
            }
        });
    for (auto& th : pool) th.join();
    for (const auto& e : errors)
        if (!e.empty()) die(e);
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) die("cannot open output file: " + path.string());
    out << content;
    if (!out) die("write failed: " + path.string());
}

std::filesystem::path prepare_out_dir(const RunOptions& opt) {
    std::filesystem::path dir(opt.out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) die("cannot create output directory: " + dir.string());
    return dir;
}

// ----------------------------------------------------------------- //
// spectrum / hardwall

enum MethodId { M_BS = 0, M_HW = 1, M_DIRECT = 2, M_RES = 3 };

const char* method_name(int m) {
    switch (m) {
        case M_BS: return "bohr_sommerfeld";
        case M_HW: return "hard_wall";
        case M_DIRECT: return "direct";
        default: return "resonance_cs";
    }
}

struct Row {
    int method = M_BS;
    double h = 0.0, phi = 0.0;
    int k = 0;
    std::optional<int> branch;
    double energy = 0.0;
    double residual = 0.0;
    std::optional<double> dE_dphi;
    std::optional<double> gamma;
    std::optional<double> theta;
};

constexpr const char* kSpectrumHeader =
    "method,h,phi,k,branch,E_k,residual,dE_dphi,gamma_est,theta\n";

std::string emit_rows(std::vector<Row> rows) {
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        if (a.method != b.method) return a.method < b.method;
        if (a.h != b.h) return a.h < b.h;
        if (a.phi != b.phi) return a.phi < b.phi;
        if (a.energy != b.energy) return a.energy < b.energy;
        return a.k < b.k;
    });
    std::string out = kSpectrumHeader;
    for (const Row& r : rows) {
        out += method_name(r.method);
        out += ',';
        out += fmt(r.h);
        out += ',';
        out += fmt(r.phi);
        out += ',';
        out += std::to_string(r.k);
        out += ',';
        if (r.branch) out += std::to_string(*r.branch);
        out += ',';
        out += fmt(r.energy);
        out += ',';
        out += fmt(r.residual);
        out += ',';
        if (r.dE_dphi) out += fmt(*r.dE_dphi);
        out += ',';
        if (r.gamma) out += fmt(*r.gamma);
        out += ',';
        if (r.theta) out += fmt(*r.theta);
        out += '\n';
    }
    return out;
}

void require_sweep_lists(const RunConfig& cfg) {
    if (cfg.h_list.empty()) die("h_list: required and must not be empty");
    if (cfg.phi_list.empty()) die("phi_list: required and must not be empty");
    if (!cfg.has_window) die("window: required");
}

// Levels per (method, h index, phi index), gathered in parallel.
using LevelGrid = std::vector<std::vector<std::vector<std::vector<Row>>>>;

LevelGrid compute_levels(const RunConfig& cfg, const RunOptions& opt,
                         const std::vector<int>& methods) {
    const size_t H = cfg.h_list.size(), P = cfg.phi_list.size();
    LevelGrid grid(methods.size());
    for (auto& per_h : grid)
        per_h.assign(H, std::vector<std::vector<Row>>(P));
    struct Task {
        size_t mi, hi, pi;
    };
    std::vector<Task> tasks;
    for (size_t mi = 0; mi < methods.size(); ++mi)
        for (size_t hi = 0; hi < H; ++hi)
            for (size_t pi = 0; pi < P; ++pi) tasks.push_back({mi, hi, pi});
    run_parallel(tasks.size(), opt.jobs, [&](size_t ti) {
        const Task& t = tasks[ti];
        int m = methods[t.mi];
        double h = cfg.h_list[t.hi], phi = cfg.phi_list[t.pi];
        std::vector<Row>& out = grid[t.mi][t.hi][t.pi];
        if (m == M_BS || m == M_HW) {
            std::vector<abdg_level> ls;
            if (m == M_BS) {
                Handle p(cfg.profile, phi);
                ls = fetch_semiclassical(p, h, cfg.window);
            } else {
                ls = fetch_hard_wall(cfg.profile, phi, h, cfg.window);
            }
            for (const auto& l : ls) {
                Row r;
                r.method = m;
                r.h = h;
                r.phi = phi;
                r.k = l.k;
                r.branch = l.branch_sign;
                r.energy = l.energy;
                r.residual = l.residual;
                out.push_back(r);
            }
        } else if (m == M_DIRECT) {
            Handle p(cfg.profile, phi);
            std::vector<abdg_bound_state> bs =
                fetch_bound_states(p, h, cfg.grid_X, cfg.grid_N, cfg.window);
            for (size_t i = 0; i < bs.size(); ++i) {
                Row r;
                r.method = m;
                r.h = h;
                r.phi = phi;
                r.k = static_cast<int>(i);
                r.energy = bs[i].energy;
                r.residual = bs[i].residual;
                out.push_back(r);
            }
        }
    });
    return grid;
}

// dE/dphi at interior sweep points: centered difference over the phi grid,
// neighbor level chosen by nearest energy.
void fill_supercurrent(const RunConfig& cfg, LevelGrid& grid) {
    const size_t P = cfg.phi_list.size();
    if (P < 3) return;
    auto nearest = [](const std::vector<Row>& rows, double e) -> const Row* {
        const Row* best = nullptr;
        double d = 0.0;
        for (const Row& r : rows) {
            double di = std::fabs(r.energy - e);
            if (!best || di < d) {
                best = &r;
                d = di;
            }
        }
        return best;
    };
    for (auto& per_method : grid)
        for (auto& per_h : per_method)
            for (size_t pi = 1; pi + 1 < P; ++pi) {
                double dphi = cfg.phi_list[pi + 1] - cfg.phi_list[pi - 1];
                if (dphi == 0.0) continue;
                for (Row& r : per_h[pi]) {
                    const Row* lo = nearest(per_h[pi - 1], r.energy);
                    const Row* hi = nearest(per_h[pi + 1], r.energy);
                    if (lo && hi)
                        r.dE_dphi = (hi->energy - lo->energy) / dphi;
                }
            }
}

std::vector<Row> flatten(const LevelGrid& grid) {
    std::vector<Row> rows;
    for (const auto& per_method : grid)
        for (const auto& per_h : per_method)
            for (const auto& cell : per_h)
                rows.insert(rows.end(), cell.begin(), cell.end());
    return rows;
}

std::string gnuplot_spectrum(const std::string& csv_name) {
    std::string s;
    s += "set datafile separator ','\n";
    s += "set xlabel 'phi'\n";
    s += "set ylabel 'E_k'\n";
    s += "plot '" + csv_name + "' every ::1 using 3:6 with points pt 7 ps 0.4 title 'levels'\n";
    return s;
}

int spectrum_like(const RunConfig& cfg, const RunOptions& opt, bool hardwall_only) {
    require_sweep_lists(cfg);
    std::vector<int> methods;
    if (hardwall_only) {
        methods.push_back(M_HW);
    } else {
        if (cfg.methods.bohr_sommerfeld) methods.push_back(M_BS);
        if (cfg.methods.hard_wall) methods.push_back(M_HW);
        if (cfg.methods.direct) {
            if (!cfg.has_grid) die("grid: required when methods.direct is on");
            methods.push_back(M_DIRECT);
        }
        if (methods.empty() && !cfg.methods.resonances)
            die("methods: at least one method must be enabled");
        if (cfg.methods.resonances && !cfg.methods.bohr_sommerfeld)
            die("methods.resonances: requires methods.bohr_sommerfeld for seeding");
        if (cfg.methods.resonances && !cfg.has_grid)
            die("grid: required when methods.resonances is on");
    }

    LevelGrid grid = compute_levels(cfg, opt, methods);
    fill_supercurrent(cfg, grid);
    std::vector<Row> rows = flatten(grid);

    if (!hardwall_only && cfg.methods.resonances) {
        // seeds: the semiclassical levels already computed (method index 0)
        struct ResTask {
            double h, phi, theta, seed, spacing;
            int k, branch;
            Row out;
            bool done = false;
        };
        std::vector<ResTask> rtasks;
        size_t bs_index = 0; // M_BS is pushed first when resonances are on
        for (size_t hi = 0; hi < cfg.h_list.size(); ++hi)
            for (size_t pi = 0; pi < cfg.phi_list.size(); ++pi) {
                const std::vector<Row>& seeds = grid[bs_index][hi][pi];
                for (size_t i = 0; i < seeds.size(); ++i) {
                    double spacing = 0.5 * cfg.profile.delta0;
                    if (seeds.size() > 1) {
                        double g = std::numeric_limits<double>::infinity();
                        if (i > 0)
                            g = std::min(g, seeds[i].energy - seeds[i - 1].energy);
                        if (i + 1 < seeds.size())
                            g = std::min(g, seeds[i + 1].energy - seeds[i].energy);
                        spacing = g;
                    }
                    for (double th : cfg.theta_list) {
                        ResTask t;
                        t.h = cfg.h_list[hi];
                        t.phi = cfg.phi_list[pi];
                        t.theta = th;
                        t.seed = seeds[i].energy;
                        t.spacing = spacing;
                        t.k = seeds[i].k;
                        t.branch = seeds[i].branch ? *seeds[i].branch : 0;
                        rtasks.push_back(t);
                    }
                }
            }
        run_parallel(rtasks.size(), opt.jobs, [&](size_t i) {
            ResTask& t = rtasks[i];
            Handle p(cfg.profile, t.phi);
            abdg_resonance r{};
            abdg_status s = abdg_resonance_cs(p.get(), t.h, cfg.grid_X, cfg.grid_N,
                                              t.theta, -1.0, t.seed, t.spacing,
                                              /*with_stability=*/0,
                                              /*richardson=*/1, &r);
            if (s != ABDG_OK && s != ABDG_NO_CONVERGENCE) die_api("resonance");
            Row row;
            row.method = M_RES;
            row.h = t.h;
            row.phi = t.phi;
            row.k = t.k;
            row.branch = t.branch;
            row.energy = r.energy_re;
            row.residual = r.residual;
            row.gamma = r.gamma;
            row.theta = t.theta;
            t.out = row;
            t.done = true;
        });
        for (const ResTask& t : rtasks)
            if (t.done) rows.push_back(t.out);
    }

    std::filesystem::path dir = prepare_out_dir(opt);
    std::string base = hardwall_only ? "hardwall" : "spectrum";
    write_file(dir / (base + ".csv"), emit_rows(std::move(rows)));
    if (opt.emit_gnuplot)
        write_file(dir / (base + ".gp"), gnuplot_spectrum(base + ".csv"));
    std::cout << "wrote " << (dir / (base + ".csv")).string() << "\n";
    return 0;
}

// ----------------------------------------------------------------- //
// widths

struct WidthRow {
    double h = 0.0;
    int k = 0, branch = 0;
    double seed = 0.0;
    abdg_resonance cs{};
    abdg_resonance sh{};
    abdg_width est{};
    bool cs_ok = false, sh_ok = false;
    bool below_floor = false;
};

constexpr const char* kWidthsHeader =
    "h,k,branch,E_seed,E_cs_re,E_cs_im,gamma_cs,E_shoot_re,E_shoot_im,"
    "gamma_shooting,theta_barrier,bare_exponent,gamma_semiclassical,"
    "below_floor,escaped,converged\n";

struct SlopeFit {
    double slope = 0.0, intercept = 0.0, r2 = 0.0;
    size_t n = 0;
};

std::optional<SlopeFit> least_squares(const std::vector<std::pair<double, double>>& pts) {
    if (pts.size() < 2) return std::nullopt;
    double sx = 0, sy = 0;
    for (auto& [x, y] : pts) {
        sx += x;
        sy += y;
    }
    double mx = sx / pts.size(), my = sy / pts.size();
    double sxx = 0, sxy = 0, syy = 0;
    for (auto& [x, y] : pts) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
        syy += (y - my) * (y - my);
    }
    if (sxx == 0.0) return std::nullopt;
    SlopeFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    f.n = pts.size();
    double ss_res = 0;
    for (auto& [x, y] : pts) {
        double e = y - (f.intercept + f.slope * x);
        ss_res += e * e;
    }
    f.r2 = (syy > 0.0) ? 1.0 - ss_res / syy : 1.0;
    return f;
}

int run_widths_impl(const RunConfig& cfg, const RunOptions& opt) {
    require_sweep_lists(cfg);
    if (!(cfg.methods.direct && cfg.methods.bohr_sommerfeld))
        die("methods: widths requires both direct and bohr_sommerfeld");
    if (!cfg.has_grid) die("grid: required for widths");
    if (cfg.phi_list.size() != 1)
        die("phi_list: widths expects exactly one phase value");
    const double phi = cfg.phi_list[0];
    const double theta = cfg.theta_list[0];

    // seeds per h
    std::vector<std::vector<abdg_level>> seeds(cfg.h_list.size());
    run_parallel(cfg.h_list.size(), opt.jobs, [&](size_t hi) {
        Handle p(cfg.profile, phi);
        seeds[hi] = fetch_semiclassical(p, cfg.h_list[hi], cfg.window);
    });

    std::vector<WidthRow> rows;
    for (size_t hi = 0; hi < cfg.h_list.size(); ++hi)
        for (size_t i = 0; i < seeds[hi].size(); ++i) {
            WidthRow r;
            r.h = cfg.h_list[hi];
            r.k = seeds[hi][i].k;
            r.branch = seeds[hi][i].branch_sign;
            r.seed = seeds[hi][i].energy;
            rows.push_back(r);
        }

    run_parallel(rows.size(), opt.jobs, [&](size_t i) {
        WidthRow& r = rows[i];
        Handle p(cfg.profile, phi);
        double spacing = 0.5 * cfg.profile.delta0;
        abdg_status s = abdg_resonance_cs(p.get(), r.h, cfg.grid_X, cfg.grid_N,
                                          theta, -1.0, r.seed, spacing,
                                          /*with_stability=*/0, /*richardson=*/1,
                                          &r.cs);
        r.cs_ok = (s == ABDG_OK);
        s = abdg_resonance_shooting(p.get(), r.h, r.seed, 0.0, &r.sh);
        r.sh_ok = (s == ABDG_OK);
        if (abdg_width_estimate(p.get(), r.seed, r.h, &r.est) != ABDG_OK)
            die_api("width estimate");
        // 1e-12 floor policy on top of the solver's own noise flag
        r.below_floor = r.cs.below_floor != 0 || !(r.cs.gamma > 1e-12);
    });

    std::string csv = kWidthsHeader;
    for (const WidthRow& r : rows) {
        csv += fmt(r.h);
        csv += ',';
        csv += std::to_string(r.k);
        csv += ',';
        csv += std::to_string(r.branch);
        csv += ',';
        csv += fmt(r.seed);
        csv += ',';
        csv += fmt(r.cs.energy_re);
        csv += ',';
        csv += fmt(r.cs.energy_im);
        csv += ',';
        csv += fmt(r.cs.gamma);
        csv += ',';
        csv += fmt(r.sh.energy_re);
        csv += ',';
        csv += fmt(r.sh.energy_im);
        csv += ',';
        csv += fmt(r.sh.gamma);
        csv += ',';
        csv += fmt(r.est.theta);
        csv += ',';
        csv += fmt(r.est.bare_exponent);
        csv += ',';
        csv += fmt(r.est.gamma_estimate);
        csv += ',';
        csv += (r.below_floor ? "1" : "0");
        csv += ',';
        csv += (r.cs.escaped ? "1" : "0");
        csv += ',';
        csv += (r.cs.converged && r.cs_ok ? "1" : "0");
        csv += '\n';
    }

    // slope of ln Gamma_cs against 1/h on the rows that carry information
    std::vector<std::pair<double, double>> pts;
    std::vector<double> hs_used;
    const WidthRow* ref = nullptr;
    for (const WidthRow& r : rows) {
        if (!r.cs_ok || r.below_floor || r.cs.escaped) continue;
        pts.push_back({1.0 / r.h, std::log(r.cs.gamma)});
        hs_used.push_back(r.h);
        if (!ref) ref = &r;
    }
    std::sort(hs_used.begin(), hs_used.end());
    hs_used.erase(std::unique(hs_used.begin(), hs_used.end()), hs_used.end());

    std::string status;
    std::optional<SlopeFit> fit;
    double predicted = 0.0;
    if (hs_used.size() < 4) {
        status = pts.empty() ? "refused_all_below_floor" : "refused_fewer_than_4_h";
    } else {
        fit = least_squares(pts);
        if (!fit) {
            status = "refused_degenerate";
        } else {
            status = "ok";
        }
    }
    if (ref) {
        // predicted slope d ln Gamma / d(1/h) = -2 Theta / alpha at the
        // reference level (first usable row)
        abdg_geometry g{};
        Handle p(cfg.profile, phi);
        if (abdg_classical_geometry(p.get(), ref->seed, cfg.tol_root, cfg.tol_quad,
                                    &g) != ABDG_OK)
            die_api("geometry");
        predicted = -2.0 * g.barrier_finite / g.alpha;
    }

    std::string summary =
        "status,points_used,h_values_used,fitted_slope,predicted_slope,"
        "r_squared,reference_energy\n";
    summary += status;
    summary += ',';
    summary += std::to_string(pts.size());
    summary += ',';
    summary += std::to_string(hs_used.size());
    summary += ',';
    if (fit) summary += fmt(fit->slope);
    summary += ',';
    if (ref) summary += fmt(predicted);
    summary += ',';
    if (fit) summary += fmt(fit->r2);
    summary += ',';
    if (ref) summary += fmt(ref->seed);
    summary += '\n';

    std::filesystem::path dir = prepare_out_dir(opt);
    write_file(dir / "widths.csv", csv);
    write_file(dir / "widths_summary.csv", summary);
    if (opt.emit_gnuplot) {
        std::string gp;
        gp += "set datafile separator ','\n";
        gp += "set xlabel '1/h'\n";
        gp += "set ylabel 'ln Gamma'\n";
        gp += "plot 'widths.csv' every ::1 using (1/$1):(log($7)) with points pt 7 title 'complex scaling'\n";
        write_file(dir / "widths.gp", gp);
    }
    std::cout << "wrote " << (dir / "widths.csv").string() << "\n";
    std::cout << "fit: " << status;
    if (fit)
        std::cout << " slope=" << fmt(fit->slope) << " predicted=" << fmt(predicted)
                  << " r2=" << fmt(fit->r2);
    std::cout << "\n";
    return 0;
}

// ----------------------------------------------------------------- //
// compare

int run_compare_impl(const RunConfig& cfg, const RunOptions& opt) {
    require_sweep_lists(cfg);
    if (!(cfg.methods.direct && cfg.methods.bohr_sommerfeld))
        die("methods: compare requires both direct and bohr_sommerfeld");
    if (!cfg.has_grid) die("grid: required for compare");
    const bool with_hw = cfg.methods.hard_wall;
    const size_t H = cfg.h_list.size(), P = cfg.phi_list.size();

    struct Cell {
        std::vector<abdg_level> bs;
        std::vector<abdg_bound_state> direct;
        std::vector<abdg_level> hw;
    };
    std::vector<Cell> cells(H * P);
    run_parallel(cells.size(), opt.jobs, [&](size_t i) {
        size_t hi = i / P, pi = i % P;
        double h = cfg.h_list[hi], phi = cfg.phi_list[pi];
        Handle p(cfg.profile, phi);
        Cell& c = cells[i];
        c.bs = fetch_semiclassical(p, h, cfg.window);
        c.direct = fetch_bound_states(p, h, cfg.grid_X, cfg.grid_N, cfg.window);
        if (with_hw) c.hw = fetch_hard_wall(cfg.profile, phi, h, cfg.window);
    });

    std::string csv = "h,phi,k,E_bs,E_direct,E_hardwall,diff_direct,diff_hardwall\n";
    std::ostringstream report;
    bool violated = false;
    size_t mismatches = 0;
    std::vector<double> max_diff_per_h(H, 0.0);
    double max_direct = 0.0, max_hw = 0.0;

    for (size_t hi = 0; hi < H; ++hi)
        for (size_t pi = 0; pi < P; ++pi) {
            const Cell& c = cells[hi * P + pi];
            double h = cfg.h_list[hi], phi = cfg.phi_list[pi];
            if (c.bs.size() != c.direct.size()) {
                report << "cell h=" << fmt(h) << " phi=" << fmt(phi)
                       << ": level count mismatch (semiclassical "
                       << c.bs.size() << ", direct " << c.direct.size() << ")\n";
                ++mismatches;
            }
            if (with_hw && c.hw.size() != c.bs.size()) {
                report << "cell h=" << fmt(h) << " phi=" << fmt(phi)
                       << ": level count mismatch (hard-wall " << c.hw.size()
                       << ", semiclassical " << c.bs.size() << ")\n";
                ++mismatches;
            }
            size_t n = std::min(c.bs.size(), c.direct.size());
            for (size_t i = 0; i < n; ++i) {
                double e_bs = c.bs[i].energy;
                double e_d = c.direct[i].energy;
                double dd = std::fabs(e_bs - e_d);
                max_direct = std::max(max_direct, dd);
                max_diff_per_h[hi] = std::max(max_diff_per_h[hi], dd);
                if (dd > cfg.compare.direct_tol) violated = true;
                csv += fmt(h);
                csv += ',';
                csv += fmt(phi);
                csv += ',';
                csv += std::to_string(c.bs[i].k);
                csv += ',';
                csv += fmt(e_bs);
                csv += ',';
                csv += fmt(e_d);
                csv += ',';
                if (with_hw && i < c.hw.size()) {
                    double e_hw = c.hw[i].energy;
                    double dh = std::fabs(e_hw - e_bs);
                    max_hw = std::max(max_hw, dh);
                    if (dh > cfg.compare.hard_wall_tol) violated = true;
                    csv += fmt(e_hw);
                    csv += ',';
                    csv += fmt(dd);
                    csv += ',';
                    csv += fmt(dh);
                } else {
                    csv += ',';
                    csv += fmt(dd);
                    csv += ',';
                }
                csv += '\n';
            }
        }

    // monotone means the worst semiclassical error shrinks as h shrinks
    bool monotone = true;
    if (H >= 2) {
        std::vector<std::pair<double, double>> by_h;
        for (size_t hi = 0; hi < H; ++hi)
            by_h.push_back({cfg.h_list[hi], max_diff_per_h[hi]});
        std::sort(by_h.begin(), by_h.end());
        for (size_t i = 1; i < by_h.size(); ++i)
            if (by_h[i].second < by_h[i - 1].second) monotone = false;
    }
    if (cfg.compare.require_monotone_h && !monotone) violated = true;
    if (mismatches > 0) violated = true;

    report << "max |E_bs - E_direct| = " << fmt(max_direct)
           << " (tol " << fmt(cfg.compare.direct_tol) << ")\n";
    if (with_hw)
        report << "max |E_hardwall - E_bs| = " << fmt(max_hw) << " (tol "
               << fmt(cfg.compare.hard_wall_tol) << ")\n";
    if (H >= 2)
        report << "error monotone in h: " << (monotone ? "true" : "false") << "\n";
    report << "level count mismatches: " << mismatches << "\n";
    report << "verdict: " << (violated ? "VIOLATION" : "ok") << "\n";

    std::filesystem::path dir = prepare_out_dir(opt);
    write_file(dir / "compare.csv", csv);
    write_file(dir / "compare_report.txt", report.str());
    std::cout << report.str();
    return violated ? 3 : 0;
}

// ----------------------------------------------------------------- //
// table-D

int run_table_d_impl(const RunConfig& cfg, const RunOptions& opt) {
    const TableD& t = cfg.table_d;
    for (size_t i = 0; i < t.nu_list.size(); ++i)
        if (std::fabs(t.nu_list[i]) > 30.0)
            die("table_d.nu_list[" + std::to_string(i) + "]: |nu| must be <= 30");
    double zmax = std::max(std::fabs(t.z_min), std::fabs(t.z_max));
    if (std::hypot(zmax, t.z_imag) > 30.0)
        die("table_d: |z| must be <= 30 over the whole grid");

    std::string csv = "nu,z_re,z_im,D_re,D_im,Dprime_re,Dprime_im,precision_loss\n";
    for (double nu : t.nu_list)
        for (int i = 0; i < t.z_count; ++i) {
            double z = (t.z_count == 1)
                           ? t.z_min
                           : t.z_min + (t.z_max - t.z_min) * i / (t.z_count - 1);
            double dre = 0, dim = 0, pre = 0, pim = 0;
            int loss1 = 0, loss2 = 0;
            if (abdg_weber_d(nu, z, t.z_imag, &dre, &dim, &loss1) != ABDG_OK)
                die_api("table-D");
            if (abdg_weber_d_prime(nu, z, t.z_imag, &pre, &pim, &loss2) != ABDG_OK)
                die_api("table-D");
            csv += fmt(nu);
            csv += ',';
            csv += fmt(z);
            csv += ',';
            csv += fmt(t.z_imag);
            csv += ',';
            csv += fmt(dre);
            csv += ',';
            csv += fmt(dim);
            csv += ',';
            csv += fmt(pre);
            csv += ',';
            csv += fmt(pim);
            csv += ',';
            csv += (loss1 || loss2) ? '1' : '0';
            csv += '\n';
        }
    std::filesystem::path dir = prepare_out_dir(opt);
    write_file(dir / "table_d.csv", csv);
    std::cout << "wrote " << (dir / "table_d.csv").string() << "\n";
    return 0;
}

template <class F>
int guarded_run(F&& f) {
    try {
        return f();
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12e", v);
    return buf;
}

int run_spectrum(const RunConfig& cfg, const RunOptions& opt) {
    return guarded_run([&] { return spectrum_like(cfg, opt, false); });
}

int run_hardwall(const RunConfig& cfg, const RunOptions& opt) {
    return guarded_run([&] { return spectrum_like(cfg, opt, true); });
}

int run_widths(const RunConfig& cfg, const RunOptions& opt) {
    return guarded_run([&] { return run_widths_impl(cfg, opt); });
}

int run_compare(const RunConfig& cfg, const RunOptions& opt) {
    return guarded_run([&] { return run_compare_impl(cfg, opt); });
}

int run_table_d(const RunConfig& cfg, const RunOptions& opt) {
    return guarded_run([&] { return run_table_d_impl(cfg, opt); });
}

} // namespace andreev::cli
