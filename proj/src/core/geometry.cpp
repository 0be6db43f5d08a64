#include "core/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace andreev {

std::pair<cplx, cplx> kinetic_branches(const Profile& p, double E, double x) {
    double d = p.delta(x), m = p.mu(x);
    if (d <= E) {
        double s = std::sqrt(std::max(E * E - d * d, 0.0));
        return {cplx(m + s, 0.0), cplx(m - s, 0.0)};
    }
    double s = std::sqrt(d * d - E * E);
    return {cplx(m, s), cplx(m, -s)};
}

double turning_point(const Profile& p, double E, double tol_root) {
    if (!(E > 0.0 && E < p.delta0()))
        throw GeometryError("turning point requires 0 < E < delta0");
    double a = p.x1(), b = p.x2();
    // Delta - E goes from -E to Delta0 - E, strictly monotone on the ramp
    for (int it = 0; it < 200; ++it) {
        double m = 0.5 * (a + b);
        double f = p.delta(m) - E;
        if (std::fabs(f) <= tol_root || 0.5 * (b - a) < 1e-17 * std::max(1.0, std::fabs(m)))
            return m;
        (f < 0.0 ? a : b) = m;
    }
    return 0.5 * (a + b);
}

namespace {

// integral over the ramp segment [x1, x0] of f(x) with a sqrt branch point
// in f' at x0: substitute x = x0 - u^2, dx = -2u du
QuadResult ramp_integral(const std::function<double(double)>& f, double x1,
                         double x0, double tol_quad) {
    double umax = std::sqrt(std::max(x0 - x1, 0.0));
    if (umax == 0.0) return {};
    return integrate_adaptive(
        [&](double u) { return 2.0 * u * f(x0 - u * u); }, 0.0, umax, tol_quad);
}

} // namespace

std::pair<QuadResult, QuadResult> action_integrals(const Profile& p, double E,
                                                   double tol_quad) {
    double x0 = turning_point(p, E);
    double splus0 = std::sqrt(p.mu0() + E);   // lead integrand, exact
    double sminus0 = std::sqrt(p.mu0() - E);
    auto fp = [&](double x) { return std::sqrt(kinetic_branches(p, E, x).first.real()); };
    auto fm = [&](double x) { return std::sqrt(kinetic_branches(p, E, x).second.real()); };
    QuadResult rp = ramp_integral(fp, p.x1(), x0, tol_quad);
    QuadResult rm = ramp_integral(fm, p.x1(), x0, tol_quad);
    // lead part is constant-integrand, add in closed form; whole integral is
    // even in x so both half-axes contribute equally
    rp.value = 2.0 * (p.x1() * splus0 + rp.value);
    rm.value = 2.0 * (p.x1() * sminus0 + rm.value);
    rp.abs_error *= 2.0;
    rm.abs_error *= 2.0;
    return {rp, rm};
}

BarrierExponent barrier_exponent(const Profile& p, double E, double tol_quad) {
    BarrierExponent out;
    double s0 = std::sqrt(std::max(p.delta0() * p.delta0() - E * E, 0.0));
    out.tail_rate = std::imag(std::sqrt(cplx(p.mu0(), s0)));
    double x0 = turning_point(p, E);
    auto f = [&](double x) { return std::imag(std::sqrt(kinetic_branches(p, E, x).first)); };
    // substitution at the x0 end; the x2 end is regular (Im sqrt(K+) -> tail rate)
    double umax = std::sqrt(std::max(p.x2() - x0, 0.0));
    if (umax > 0.0) {
        out.quad = integrate_adaptive(
            [&](double u) { return 2.0 * u * f(x0 + u * u); }, 0.0, umax, tol_quad);
        out.finite = out.quad.value;
    }
    return out;
}

LocalSlope local_slope(const Profile& p, double E, double tol_root) {
    double x0 = turning_point(p, E, tol_root);
    double w = p.x2() - p.x1();
    double step = 1e-5 * w; // centered difference, O(step^2) ~ 1e-10 relative
    double alpha = (p.delta(x0 + step) - p.delta(x0 - step)) / (2.0 * step);
    if (!(alpha > 0.0))
        throw GeometryError("degenerate gap slope at the turning point");
    double xi0 = std::sqrt(p.mu(x0));
    double beta = std::sqrt(alpha) * std::pow(2.0 * xi0, -1.5);
    return {alpha, beta, xi0};
}

ClassicalGeometry classical_geometry(const Profile& p, double E,
                                     double tol_root, double tol_quad) {
    ClassicalGeometry g;
    g.energy = E;
    g.x0 = turning_point(p, E, tol_root);
    LocalSlope ls = local_slope(p, E, tol_root);
    g.alpha = ls.alpha;
    g.beta = ls.beta;
    g.xi0 = ls.xi0;
    auto [sp, sm] = action_integrals(p, E, tol_quad);
    g.action_plus = sp.value;
    g.action_minus = sm.value;
    BarrierExponent be = barrier_exponent(p, E, tol_quad);
    g.barrier_finite = be.finite;
    g.barrier_tail_rate = be.tail_rate;
    g.quad_error = std::max({sp.abs_error, sm.abs_error, be.quad.abs_error});
    g.quad_converged = sp.converged && sm.converged && be.quad.converged;
    return g;
}

} // namespace andreev
