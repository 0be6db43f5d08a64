#pragma once

#include <functional>

namespace andreev {

struct QuadResult {
    double value = 0.0;
    double abs_error = 0.0; // achieved error estimate
    bool converged = true;
    int evaluations = 0;
};

// Adaptive Gauss7/Kronrod15 on [a, b].  Bisects the worst panel until the
// summed error estimate meets rel_tol * |I| (or abs floor).  Integrand must
// be smooth; endpoint sqrt singularities are removed by substitution before
// calling this (see geometry.cpp).
QuadResult integrate_adaptive(const std::function<double(double)>& f,
                              double a, double b,
                              double rel_tol, double abs_tol = 1e-300,
                              int max_panels = 4000);

} // namespace andreev
