#include "core/quad.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace andreev {

namespace {

// Kronrod-15 abscissae on [-1,1] (positive half) and weights; Gauss-7 weights
// sit on the odd-indexed nodes.  Values are the standard QUADPACK constants.
constexpr double xgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double wgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double wg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
    double a, b, value, err;
    bool operator<(const Panel& o) const { return err < o.err; } // max-heap on err
};

Panel gk15(const std::function<double(double)>& f, double a, double b, int& evals) {
    double c = 0.5 * (a + b), hl = 0.5 * (b - a);
    double fc = f(c);
    double resg = wg[3] * fc;
    double resk = wgk[7] * fc;
    for (int j = 0; j < 7; ++j) {
        double dx = hl * xgk[j];
        double f1 = f(c - dx), f2 = f(c + dx);
        resk += wgk[j] * (f1 + f2);
        if (j % 2 == 1) resg += wg[j / 2] * (f1 + f2);
    }
    evals += 15;
    return {a, b, resk * hl, std::fabs((resk - resg) * hl)};
}

double kahan_sum(const std::vector<Panel>& ps, double Panel::*m) {
    double s = 0.0, c = 0.0;
    for (const auto& p : ps) {
        double y = p.*m - c;
        double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    return s;
}

} // namespace

QuadResult integrate_adaptive(const std::function<double(double)>& f,
                              double a, double b,
                              double rel_tol, double abs_tol, int max_panels) {
    QuadResult out;
    if (a == b) return out;
    int evals = 0;
    std::vector<Panel> panels;
    panels.push_back(gk15(f, a, b, evals));
    while ((int)panels.size() < max_panels) {
        double total = kahan_sum(panels, &Panel::value);
        double toterr = kahan_sum(panels, &Panel::err);
        if (toterr <= std::max(abs_tol, rel_tol * std::fabs(total))) break;
        std::pop_heap(panels.begin(), panels.end());
        Panel worst = panels.back();
        panels.pop_back();
        double mid = 0.5 * (worst.a + worst.b);
        panels.push_back(gk15(f, worst.a, mid, evals));
        std::push_heap(panels.begin(), panels.end());
        panels.push_back(gk15(f, mid, worst.b, evals));
        std::push_heap(panels.begin(), panels.end());
    }
    out.value = kahan_sum(panels, &Panel::value);
    out.abs_error = kahan_sum(panels, &Panel::err);
    out.converged =
        out.abs_error <= std::max(abs_tol, rel_tol * std::fabs(out.value));
    out.evaluations = evals;
    return out;
}

} // namespace andreev
