#include "core/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace andreev {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

double andreev_phase(double E, double delta0) {
    double r = std::clamp(E / delta0, -1.0, 1.0);
    return 2.0 * std::acos(r);
}

} // namespace

std::vector<Level> solve_condition(const std::function<double(double)>& g,
                                   double delta0, double phi, double h,
                                   std::pair<double, double> window,
                                   double tol_root, int scan_points) {
    auto [e_lo, e_hi] = window;
    if (!(e_lo > -delta0 && e_hi < delta0 && e_lo < e_hi))
        throw SpectrumError("window must lie inside (-delta0, delta0)");
    std::vector<Level> out;
    std::vector<double> ys(scan_points + 1), es(scan_points + 1);
    for (int i = 0; i <= scan_points; ++i) {
        double E = e_lo + (e_hi - e_lo) * i / scan_points;
        es[i] = E;
        ys[i] = g(E) / h - andreev_phase(E, delta0);
    }
    for (int b : {+1, -1}) {
        double target_off = b * phi;
        for (int i = 0; i < scan_points; ++i) {
            double ya = ys[i] - target_off, yb = ys[i + 1] - target_off;
            // all integers k with 2*pi*k inside [ya, yb); y strictly increasing
            int k_lo = (int)std::ceil(std::min(ya, yb) / two_pi - 1e-12);
            int k_hi = (int)std::floor(std::max(ya, yb) / two_pi + 1e-12);
            for (int k = k_lo; k <= k_hi; ++k) {
                double t = two_pi * k;
                if (!((ya - t) * (yb - t) <= 0.0)) continue;
                if (yb == t && i + 1 < scan_points) continue; // owned by next panel
                double a = es[i], c = es[i + 1];
                double fa = ya - t;
                // a root exactly on a scan node would defeat the sign test
                // below (fa = 0 matches neither sign); claim it outright
                if (fa == 0.0) {
                    out.push_back({k, a, b, 0.0});
                    continue;
                }
                if (yb - t == 0.0) { // right edge of the final panel
                    out.push_back({k, c, b, 0.0});
                    continue;
                }
                double E = 0.5 * (a + c), fm = 0.0;
                for (int it = 0; it < 200; ++it) {
                    E = 0.5 * (a + c);
                    fm = g(E) / h - andreev_phase(E, delta0) - target_off - t;
                    if (std::fabs(fm) <= tol_root ||
                        0.5 * (c - a) <= 4e-16 * std::max(1.0, std::fabs(E)))
                        break;
                    if ((fa < 0.0) == (fm < 0.0)) {
                        a = E;
                        fa = fm;
                    } else {
                        c = E;
                    }
                }
                out.push_back({k, E, b, std::fabs(fm)});
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Level& l, const Level& r) { return l.energy < r.energy; });
    // a root sitting exactly on a scan node can be claimed by both branches
    // when phi = 0 or pi (branches coincide); drop exact duplicates
    out.erase(std::unique(out.begin(), out.end(),
                          [](const Level& l, const Level& r) {
                              return l.k == r.k && l.branch_sign == r.branch_sign &&
                                     std::fabs(l.energy - r.energy) < 1e-14;
                          }),
              out.end());
    return out;
}

SpectrumResult hard_wall_levels(double delta0, double mu0, double phi, double L,
                                double h, std::pair<double, double> window,
                                double tol_root, int scan_points) {
    if (!(delta0 > 0.0 && mu0 > delta0 && L > 0.0 && h > 0.0))
        throw SpectrumError("hard_wall_levels: need 0 < delta0 < mu0, L > 0, h > 0");
    auto g = [=](double E) {
        return 2.0 * L * (std::sqrt(mu0 + E) - std::sqrt(mu0 - E));
    };
    SpectrumResult res;
    res.levels = solve_condition(g, delta0, phi, h, window, tol_root, scan_points);
    res.method = SpectrumMethod::HardWall;
    res.h = h;
    res.phi = phi;
    return res;
}

SpectrumResult bohr_sommerfeld_levels(const Profile& p, double h,
                                      std::pair<double, double> window,
                                      double tol_root, double tol_quad,
                                      int scan_points) {
    // The phase integral is odd in E (the electron and hole branches swap),
    // so the negative-energy half of the gap comes from the mirror image.
    auto g = [&](double E) {
        if (E == 0.0) return 0.0;
        auto [sp, sm] = action_integrals(p, std::fabs(E), tol_quad);
        double gm = sp.value - sm.value;
        return E > 0.0 ? gm : -gm;
    };
    SpectrumResult res;
    res.levels = solve_condition(g, p.delta0(), p.phi(), h, window, tol_root,
                                 scan_points);
    res.method = SpectrumMethod::BohrSommerfeld;
    res.h = h;
    res.phi = p.phi();
    return res;
}

std::vector<Supercurrent> supercurrent(const Profile& p, double h,
                                       std::pair<double, double> window,
                                       double dphi) {
    Profile plus(p.delta0(), p.mu0(), p.phi() + dphi, p.x1(), p.x2(),
                 p.lead_half_length(), p.ramp());
    Profile minus(p.delta0(), p.mu0(), p.phi() - dphi, p.x1(), p.x2(),
                  p.lead_half_length(), p.ramp());
    SpectrumResult mid = bohr_sommerfeld_levels(p, h, window);
    SpectrumResult up = bohr_sommerfeld_levels(plus, h, window);
    SpectrumResult dn = bohr_sommerfeld_levels(minus, h, window);
    // continuity matching: nearest energy, flagged when a second candidate
    // sits within twice the phi-induced shift (crossing ambiguity)
    auto nearest = [](const SpectrumResult& r, double E, double& second_gap) {
        double best = 1e300, second = 1e300, bestE = 0.0;
        for (const auto& l : r.levels) {
            double d = std::fabs(l.energy - E);
            if (d < best) {
                second = best;
                best = d;
                bestE = l.energy;
            } else if (d < second) {
                second = d;
            }
        }
        second_gap = second;
        return bestE;
    };
    std::vector<Supercurrent> out;
    for (const auto& l : mid.levels) {
        Supercurrent s;
        s.level = l;
        if (up.levels.empty() || dn.levels.empty()) {
            s.tracked = false;
            out.push_back(s);
            continue;
        }
        double gap_u = 0.0, gap_d = 0.0;
        double eu = nearest(up, l.energy, gap_u);
        double ed = nearest(dn, l.energy, gap_d);
        double shift = std::max(std::fabs(eu - l.energy), std::fabs(ed - l.energy));
        if (std::min(gap_u, gap_d) < 2.0 * shift + 1e-14)
            s.tracked = false; // two levels closer than the induced shift
        s.dE_dphi = (eu - ed) / (2.0 * dphi);
        out.push_back(s);
    }
    return out;
}

WidthEstimate width_estimate(const Profile& p, double E_k, double h) {
    // every geometric quantity is even in E (the width of -E_k equals the
    // width of E_k), so work with the magnitude
    double Ea = std::fabs(E_k);
    ClassicalGeometry g = classical_geometry(p, Ea);
    WidthEstimate w;
    w.energy = E_k;
    w.theta = g.barrier_finite;
    w.h_prime = g.alpha * h;
    w.bare_exponent = -2.0 * w.theta / w.h_prime;
    // local spacing = 2 pi / y'(E) with y the quantization phase; the step
    // must keep both stencil points inside (0, delta0)
    double dE = std::min({1e-6 * p.delta0(), 0.5 * (p.delta0() - Ea), 0.5 * Ea});
    auto y = [&](double E) {
        auto [sp, sm] = action_integrals(p, E);
        return (sp.value - sm.value) / h - andreev_phase(E, p.delta0());
    };
    double yprime = (y(Ea + dE) - y(Ea - dE)) / (2.0 * dE);
    w.prefactor = 1.0 / std::fabs(yprime); // (2pi / y') / 2pi
    w.gamma_estimate = w.prefactor * std::exp(w.bare_exponent);
    return w;
}

} // namespace andreev
