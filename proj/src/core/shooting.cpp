#include "core/shooting.hpp"

#include <cmath>

namespace andreev {

namespace shooting_detail {

namespace {

constexpr int PAIR_I[6] = {0, 0, 0, 1, 1, 2};
constexpr int PAIR_J[6] = {1, 2, 3, 2, 3, 3};
constexpr int PAIR_IDX[4][4] = {
    {-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};

inline cplx lookup(const Wedge& w, int a, int b) {
    if (a == b) return cplx(0.0, 0.0);
    int idx = PAIR_IDX[a][b];
    return (a < b) ? w[idx] : -w[idx];
}

} // namespace

Wedge wedge2(const Vec4& a, const Vec4& b) {
    Wedge w;
    for (int p = 0; p < 6; ++p) {
        int i = PAIR_I[p], j = PAIR_J[p];
        w[p] = a[i] * b[j] - a[j] * b[i];
    }
    return w;
}

Wedge apply_comp6(const Mat4& T, const Wedge& w) {
    Wedge out;
    for (int p = 0; p < 6; ++p) {
        int i = PAIR_I[p], j = PAIR_J[p];
        cplx s(0.0, 0.0);
        for (int q = 0; q < 6; ++q) {
            int k = PAIR_I[q], l = PAIR_J[q];
            s += (T[i][k] * T[j][l] - T[i][l] * T[j][k]) * w[q];
        }
        out[p] = s;
    }
    return out;
}

cplx pluecker_pair(const Wedge& L, const Wedge& R) {
    // det[l1 l2 r1 r2] expanded along the first two columns
    return L[0] * R[5] - L[1] * R[4] + L[2] * R[3] + L[3] * R[2] -
           L[4] * R[1] + L[5] * R[0];
}

double wedge_norm(const Wedge& w) {
    double s = 0.0;
    for (const auto& z : w) s += std::norm(z);
    return std::sqrt(s);
}

std::pair<Vec4, Vec4> bank_modes(const Profile& p, cplx E, double h, int side) {
    double d0 = p.delta0(), mu0 = p.mu0();
    cplx s = std::sqrt(d0 * d0 - E * E); // principal branch, Re s > 0 in the gap
    cplx kp = std::sqrt(mu0 + cplx(0.0, 1.0) * s); // xi1 + i xi2
    cplx km = std::sqrt(mu0 - cplx(0.0, 1.0) * s); // xi1 - i xi2
    // e^{iqx/h} decays toward side * infinity for q in the half plane
    // Im(side * q) > 0: {+kp, -km} on the right, {-kp, +km} on the left
    cplx q1 = (side > 0) ? kp : -kp;
    cplx q2 = (side > 0) ? -km : km;
    double phase_half = 0.5 * p.phase(side * p.x2());
    cplx u0 = d0 * std::exp(cplx(0.0, phase_half));
    auto make = [&](cplx q) {
        cplx v0 = E - (q * q - mu0);
        Vec4 y{u0, v0, cplx(0.0, 1.0) * q * u0 / h, cplx(0.0, 1.0) * q * v0 / h};
        return y;
    };
    return {make(q1), make(q2)};
}

Mat4 lead_transfer(const Profile& p, cplx E, double h, double d) {
    cplx ke = std::sqrt(p.mu0() + E) / h;
    cplx kh = std::sqrt(p.mu0() - E) / h;
    Mat4 T{};
    cplx ce = std::cos(ke * d), se = std::sin(ke * d);
    cplx ch = std::cos(kh * d), sh = std::sin(kh * d);
    T[0][0] = ce;
    T[0][2] = se / ke;
    T[2][0] = -ke * se;
    T[2][2] = ce;
    T[1][1] = ch;
    T[1][3] = sh / kh;
    T[3][1] = -kh * sh;
    T[3][3] = ch;
    return T;
}

Mat4 system_matrix(const Profile& p, cplx E, double h, double x) {
    Mat4 A{};
    double h2 = h * h;
    double dl = p.delta(x);
    cplx off = dl * std::exp(cplx(0.0, 0.5 * p.phase(x)));
    A[0][2] = 1.0;
    A[1][3] = 1.0;
    A[2][0] = -(E + p.mu(x)) / h2;
    A[2][1] = off / h2;
    A[3][0] = -std::conj(off) / h2;
    A[3][1] = (E - p.mu(x)) / h2;
    return A;
}

namespace {

// d/dx of the bivector under y' = A y
Wedge wedge_rhs(const Mat4& A, const Wedge& w) {
    Wedge dw;
    for (int p = 0; p < 6; ++p) {
        int i = PAIR_I[p], j = PAIR_J[p];
        cplx s(0.0, 0.0);
        for (int m = 0; m < 4; ++m)
            s += A[i][m] * lookup(w, m, j) + A[j][m] * lookup(w, i, m);
        dw[p] = s;
    }
    return dw;
}

// Dormand-Prince 5(4) coefficients
constexpr double C2 = 1.0 / 5, C3 = 3.0 / 10, C4 = 4.0 / 5, C5 = 8.0 / 9;
constexpr double A21 = 1.0 / 5;
constexpr double A31 = 3.0 / 40, A32 = 9.0 / 40;
constexpr double A41 = 44.0 / 45, A42 = -56.0 / 15, A43 = 32.0 / 9;
constexpr double A51 = 19372.0 / 6561, A52 = -25360.0 / 2187,
                 A53 = 64448.0 / 6561, A54 = -212.0 / 729;
constexpr double A61 = 9017.0 / 3168, A62 = -355.0 / 33, A63 = 46732.0 / 5247,
                 A64 = 49.0 / 176, A65 = -5103.0 / 18656;
constexpr double B1 = 35.0 / 384, B3 = 500.0 / 1113, B4 = 125.0 / 192,
                 B5 = -2187.0 / 6784, B6 = 11.0 / 84;
constexpr double E1 = 35.0 / 384 - 5179.0 / 57600, E3 = 500.0 / 1113 - 7571.0 / 16695,
                 E4 = 125.0 / 192 - 393.0 / 640,
                 E5 = -2187.0 / 6784 + 92097.0 / 339200,
                 E6 = 11.0 / 84 - 187.0 / 2100, E7 = -1.0 / 40;

} // namespace

IntegrateStats integrate_wedge(const Profile& p, cplx E, double h,
                               double x_from, double x_to, Wedge& w,
                               double rtol) {
    IntegrateStats st;
    if (x_from == x_to) return st;
    double dir = (x_to > x_from) ? 1.0 : -1.0;
    double span = std::fabs(x_to - x_from);
    double hs = dir * span / 64.0; // initial guess, controller adapts fast
    double x = x_from;
    auto rhs = [&](double xx, const Wedge& ww) {
        return wedge_rhs(system_matrix(p, E, h, xx), ww);
    };
    Wedge k1 = rhs(x, w);
    const double atol = 1e-300; // pure relative control on a normalized wedge
    while (dir * (x_to - x) > 0.0) {
        if (dir * (x + hs - x_to) > 0.0) hs = x_to - x;
        Wedge y2, y3, y4, y5, y6, y7, k2, k3, k4, k5, k6, k7, err;
        for (int i = 0; i < 6; ++i) y2[i] = w[i] + hs * A21 * k1[i];
        k2 = rhs(x + C2 * hs, y2);
        for (int i = 0; i < 6; ++i)
            y3[i] = w[i] + hs * (A31 * k1[i] + A32 * k2[i]);
        k3 = rhs(x + C3 * hs, y3);
        for (int i = 0; i < 6; ++i)
            y4[i] = w[i] + hs * (A41 * k1[i] + A42 * k2[i] + A43 * k3[i]);
        k4 = rhs(x + C4 * hs, y4);
        for (int i = 0; i < 6; ++i)
            y5[i] = w[i] + hs * (A51 * k1[i] + A52 * k2[i] + A53 * k3[i] +
                                 A54 * k4[i]);
        k5 = rhs(x + C5 * hs, y5);
        for (int i = 0; i < 6; ++i)
            y6[i] = w[i] + hs * (A61 * k1[i] + A62 * k2[i] + A63 * k3[i] +
                                 A64 * k4[i] + A65 * k5[i]);
        k6 = rhs(x + hs, y6);
        for (int i = 0; i < 6; ++i)
            y7[i] = w[i] + hs * (B1 * k1[i] + B3 * k3[i] + B4 * k4[i] +
                                 B5 * k5[i] + B6 * k6[i]);
        k7 = rhs(x + hs, y7);
        double errnorm = 0.0;
        for (int i = 0; i < 6; ++i) {
            cplx e = hs * (E1 * k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] +
                           E6 * k6[i] + E7 * k7[i]);
            double sc = atol + rtol * std::max(std::abs(w[i]), std::abs(y7[i]));
            double q = std::abs(e) / sc;
            errnorm = std::max(errnorm, q);
        }
        if (errnorm <= 1.0) {
            x += hs;
            w = y7;
            k1 = k7; // FSAL
            ++st.steps;
        } else {
            ++st.rejected;
        }
        double fac = 0.9 * std::pow(std::max(errnorm, 1e-10), -0.2);
        hs *= std::clamp(fac, 0.2, 5.0);
        if (std::fabs(hs) < 1e-14 * span) {
            st.ok = false; // step underflow: stiffness failure
            return st;
        }
        if (st.steps + st.rejected > 2000000) {
            st.ok = false;
            return st;
        }
    }
    return st;
}

cplx matching_det(const Profile& p, cplx E, double h, double rtol, bool* ok) {
    bool good = true;
    auto side_wedge = [&](int side) {
        auto [ya, yb] = bank_modes(p, E, h, side);
        Wedge w = wedge2(ya, yb);
        double n0 = wedge_norm(w);
        for (auto& z : w) z /= n0;
        double x_start = side * p.x2();
        double x_end = side * p.x1();
        IntegrateStats st = integrate_wedge(p, E, h, x_start, x_end, w, rtol);
        good = good && st.ok;
        // exact transfer across the gapless lead to the matching point x = 0
        Mat4 T = lead_transfer(p, E, h, -x_end);
        w = apply_comp6(T, w);
        double n1 = wedge_norm(w);
        for (auto& z : w) z /= n1;
        return w;
    };
    Wedge wl = side_wedge(-1);
    Wedge wr = side_wedge(+1);
    if (ok) *ok = good;
    return pluecker_pair(wl, wr);
}

} // namespace shooting_detail

Resonance shooting_resonance(const Profile& p, double h, cplx seed,
                             double rk_tol, double newton_tol, int max_newton) {
    using namespace shooting_detail;
    Resonance r;
    r.method = ResonanceMethod::Shooting;
    cplx E = seed;
    bool ok = true;
    cplx f = matching_det(p, E, h, rk_tol, &ok);
    if (!ok) return r;
    int it = 0;
    for (; it < max_newton; ++it) {
        if (std::abs(f) <= newton_tol) break;
        double de = 1e-7 * std::max(1.0, std::abs(E));
        cplx fp = matching_det(p, E + de, h, rk_tol, &ok);
        cplx fm = matching_det(p, E - de, h, rk_tol, &ok);
        if (!ok) return r;
        cplx df = (fp - fm) / (2.0 * de);
        if (std::abs(df) == 0.0) return r;
        cplx step = f / df;
        // trust region: the determinant is analytic but the Newton model is
        // local; cap steps at a gap fraction so the seed basin is respected
        double cap = 0.05 * p.delta0();
        if (std::abs(step) > cap) step *= cap / std::abs(step);
        E -= step;
        f = matching_det(p, E, h, rk_tol, &ok);
        if (!ok) return r;
        if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(E))) break;
    }
    r.energy = E;
    r.residual = std::abs(f);
    r.converged = std::abs(f) <= std::max(newton_tol, 1e-9);
    r.iterations = it;
    double raw = -2.0 * E.imag();
    r.gamma = std::max(raw, 0.0);
    r.below_floor = raw < 1e-10;
    r.stability = r.residual; // Newton residual doubles as the stability field
    if (r.converged) {
        // root basins shrink with h (adjacent levels sit ~ pi / |y'| apart,
        // y the quantization phase), so flag convergence onto a neighbour
        try {
            WidthEstimate w = width_estimate(p, E.real(), h);
            double spacing = M_PI * w.prefactor; // pi / |y'(E)|
            r.escaped = std::fabs(E.real() - seed.real()) > spacing;
        } catch (const std::exception&) {
            // no spacing estimate when the root left the gap interior
        }
    }
    return r;
}

} // namespace andreev
