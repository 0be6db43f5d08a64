#include "core/solver.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace andreev {

namespace {

constexpr double kWidthFloor = 1e-10;

// deterministic start vector; a fixed seed keeps every run byte-identical
std::vector<cplx> start_vector(int n, bool complex_part) {
    std::mt19937_64 rng(0x5eedULL);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<cplx> v(n);
    for (int i = 0; i < n; ++i) {
        double re = u(rng);
        double im = complex_part ? u(rng) : 0.0;
        v[i] = cplx(re, im);
    }
    return v;
}

double norm2(const std::vector<cplx>& v) {
    double s = 0.0;
    for (const auto& z : v) s += std::norm(z);
    return std::sqrt(s);
}

void normalize(std::vector<cplx>& v) {
    double nv = norm2(v);
    for (auto& z : v) z /= nv;
}

// residual ||Mv - rho v|| with rho the (conjugate) Rayleigh quotient
double rayleigh_residual(const BandMatrix& M, const std::vector<cplx>& v,
                         cplx& rho, std::vector<cplx>& work) {
    int n = M.n;
    work.resize(n);
    M.matvec(v.data(), work.data());
    cplx num(0.0, 0.0);
    double den = 0.0;
    for (int i = 0; i < n; ++i) {
        num += std::conj(v[i]) * work[i];
        den += std::norm(v[i]);
    }
    rho = num / den;
    double r = 0.0;
    for (int i = 0; i < n; ++i) r += std::norm(work[i] - rho * v[i]);
    return std::sqrt(r) / std::sqrt(den);
}

InertiaResult inertia_nudged(const BandMatrix& M, double sigma, double nudge) {
    InertiaResult r = hermitian_inertia(M, sigma);
    for (int attempt = 0; r.breakdown && attempt < 8; ++attempt) {
        sigma += nudge;
        r = hermitian_inertia(M, sigma);
    }
    if (r.breakdown)
        throw SolverError("inertia factorization kept breaking down after shifts");
    return r;
}

} // namespace

std::vector<BoundState> bound_states(const DiscretizedOperator& op,
                                     std::pair<double, double> window,
                                     double tol_residual) {
    if (op.theta != 0.0)
        throw SolverError("bound_states requires the unscaled (Hermitian) operator");
    const BandMatrix& M = op.M;
    double nudge = 1e-12 * op.delta0;
    auto count_below = [&](double s) { return inertia_nudged(M, s, nudge).below; };

    struct Seg {
        double a, b;
        int ca, cb;
    };
    std::vector<Seg> stack{{window.first, window.second,
                            count_below(window.first), count_below(window.second)}};
    std::vector<std::pair<double, double>> isolated; // (lo, hi) with single ev
    double split_tol = 1e-10 * std::max(1.0, op.delta0);
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        int m = s.cb - s.ca;
        if (m <= 0) continue;
        if (m == 1 && (s.b - s.a) <= split_tol) {
            isolated.push_back({s.a, s.b});
            continue;
        }
        double mid = 0.5 * (s.a + s.b);
        int cm = count_below(mid);
        stack.push_back({s.a, mid, s.ca, cm});
        stack.push_back({mid, s.b, cm, s.cb});
    }
    std::sort(isolated.begin(), isolated.end());

    std::vector<BoundState> out;
    int n = M.n;
    std::vector<cplx> work;
    for (auto [lo, hi] : isolated) {
        double sigma = 0.5 * (lo + hi);
        BandLU lu;
        double sig = sigma;
        for (int attempt = 0; !lu.factor(M, cplx(sig, 0.0)) && attempt < 8; ++attempt)
            sig += nudge;
        std::vector<cplx> v = start_vector(n, false);
        normalize(v);
        cplx rho(sigma, 0.0);
        double res = 1e300, prev = 1e300;
        for (int it = 0; it < 30; ++it) {
            lu.solve(v.data());
            normalize(v);
            res = rayleigh_residual(M, v, rho, work);
            if (res <= tol_residual) break;
            if (it > 4 && res > 0.5 * prev) break; // round-off floor reached
            prev = res;
            // Hermitian: Rayleigh shift accelerates once inside the isolated
            // bracket; the bracket guarantees we cannot jump eigenvalues
            if (it >= 2 && res < 1e-4 && rho.real() > lo && rho.real() < hi) {
                sig = rho.real();
                for (int attempt = 0; !lu.factor(M, cplx(sig, 0.0)) && attempt < 8;
                     ++attempt)
                    sig += nudge;
            }
        }
        BoundState bs;
        bs.energy = rho.real();
        bs.residual = res;
        double vmax = 0.0;
        for (const auto& z : v) vmax = std::max(vmax, std::abs(z));
        double edge = std::max(std::max(std::abs(v[0]), std::abs(v[1])),
                               std::max(std::abs(v[n - 2]), std::abs(v[n - 1])));
        bs.boundary_amplitude = edge / vmax;
        out.push_back(bs);
    }
    std::sort(out.begin(), out.end(),
              [](const BoundState& a, const BoundState& b) { return a.energy < b.energy; });
    return out;
}

std::optional<std::pair<cplx, double>> shift_invert_eigen(
    const DiscretizedOperator& op, cplx sigma, double tol_residual, int max_iter) {
    const BandMatrix& M = op.M;
    int n = M.n;
    BandLU lu;
    cplx sig = sigma;
    double nudge = 1e-12 * op.delta0;
    for (int attempt = 0; !lu.factor(M, sig) && attempt < 8; ++attempt)
        sig += cplx(nudge, 0.0);
    std::vector<cplx> v = start_vector(n, true);
    normalize(v);
    std::vector<cplx> work;
    cplx rho = sigma;
    double res = 1e300;
    bool locked = false; // fixed-shift phase first; early Rayleigh updates can
                         // hand the iteration to a rotated-continuum state
    for (int it = 0; it < max_iter; ++it) {
        lu.solve(v.data());
        normalize(v);
        res = rayleigh_residual(M, v, rho, work);
        if (res <= tol_residual) return std::make_pair(rho, res);
        if (!locked && res < 1e-4) locked = true;
        if (locked) {
            sig = rho;
            for (int attempt = 0; !lu.factor(M, sig) && attempt < 8; ++attempt)
                sig += cplx(nudge, 0.0);
        }
    }
    if (res < 1e-8) return std::make_pair(rho, res); // usable but flag via residual
    return std::nullopt;
}

namespace {

Resonance classify(cplx ev, double res, double theta, double seed,
                   double level_spacing) {
    Resonance r;
    r.energy = ev;
    r.method = ResonanceMethod::ComplexScaling;
    r.theta_used = theta;
    r.residual = res;
    r.converged = true;
    double raw = -2.0 * ev.imag();
    r.gamma = std::max(raw, 0.0);
    r.below_floor = raw < kWidthFloor;
    r.escaped = std::fabs(ev.real() - seed) > level_spacing;
    return r;
}

} // namespace

namespace {

// the unscaled grid is legitimate for bound states, not for resonances
void require_resonance_theta(double theta) {
    if (!(theta >= 0.05 && theta <= 0.3))
        throw DiscretizeError("theta must lie in [0.05, 0.3] for complex scaling");
}

} // namespace

Resonance resonance_complex_scaling(const Profile& p, double h, double X, int N,
                                    double theta, double x_scale_start,
                                    double seed, double level_spacing,
                                    bool with_stability) {
    require_resonance_theta(theta);
    DiscretizedOperator op = discretize(p, h, X, N, theta, x_scale_start);
    auto r0 = shift_invert_eigen(op, cplx(seed, 0.0));
    if (!r0) {
        Resonance r;
        r.method = ResonanceMethod::ComplexScaling;
        r.theta_used = theta;
        return r; // converged = false
    }
    Resonance r = classify(r0->first, r0->second, theta, seed, level_spacing);
    if (with_stability && theta + 0.05 <= 0.3) {
        DiscretizedOperator op2 =
            discretize(p, h, X, N, theta + 0.05, x_scale_start);
        auto r1 = shift_invert_eigen(op2, cplx(seed, 0.0));
        if (r1) r.stability = std::abs(r1->first - r0->first);
    }
    return r;
}

Resonance resonance_cs_richardson(const Profile& p, double h, double X, int N,
                                  double theta, double x_scale_start,
                                  double seed, double level_spacing,
                                  bool with_stability) {
    require_resonance_theta(theta);
    auto solve_pair = [&](double th) -> std::optional<std::pair<cplx, double>> {
        DiscretizedOperator oc = discretize(p, h, X, N, th, x_scale_start);
        DiscretizedOperator of = discretize(p, h, X, 2 * N, th, x_scale_start);
        auto ec = shift_invert_eigen(oc, cplx(seed, 0.0));
        auto ef = shift_invert_eigen(of, cplx(seed, 0.0));
        if (!ec || !ef) return std::nullopt;
        cplx ev = (4.0 * ef->first - ec->first) / 3.0;
        return std::make_pair(ev, std::max(ec->second, ef->second));
    };
    auto e0 = solve_pair(theta);
    if (!e0) {
        Resonance r;
        r.method = ResonanceMethod::ComplexScaling;
        r.theta_used = theta;
        return r;
    }
    Resonance r = classify(e0->first, e0->second, theta, seed, level_spacing);
    if (with_stability && theta + 0.05 <= 0.3) {
        auto e1 = solve_pair(theta + 0.05);
        if (e1) r.stability = std::abs(e1->first - e0->first);
    }
    return r;
}

} // namespace andreev
