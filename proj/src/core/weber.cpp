#include "core/weber.hpp"

#include <cmath>
#include <numbers>

namespace andreev {

WeberIndex weber_index(double E, double xi0, double alpha, double h) {
    WeberIndex w;
    w.nu = E * E / (4.0 * xi0 * alpha * h);
    w.e1 = E / (4.0 * xi0 * xi0);
    w.t = E * E / (2.0 * xi0 * alpha);
    return w;
}

double rgamma(double x) {
    if (x <= 0.0 && x == std::floor(x)) return 0.0;
    return 1.0 / std::tgamma(x);
}

namespace {

// Kummer M(a, c, x) by direct series; magsum accumulates |term| so the caller
// can judge cancellation.  Series terminates exactly when a is a non-positive
// integer (Pochhammer hits zero).
cplx kummer_m(double a, double c, cplx x, double& magsum) {
    cplx term(1.0, 0.0), sum(1.0, 0.0);
    magsum = 1.0;
    double ax = std::abs(x);
    for (int n = 0; n < 20000; ++n) {
        double num = a + n;
        if (num == 0.0) break; // polynomial case: all later terms vanish
        term *= (num / (c + n)) * x / double(n + 1);
        sum += term;
        magsum += std::abs(term);
        if (std::abs(term) <= 1e-18 * magsum && n > ax) break;
    }
    return sum;
}

} // namespace

WeberValue parabolic_cylinder_D(double nu, cplx z) {
    if (std::abs(z) > 30.0 || std::fabs(nu) > 30.0)
        throw WeberDomainError("parabolic_cylinder_D supports |z| <= 30, |nu| <= 30");
    const double sqrt_pi = std::sqrt(std::numbers::pi);
    cplx x = 0.5 * z * z;
    double mag1 = 0.0, mag2 = 0.0;
    cplx m1 = kummer_m(-0.5 * nu, 0.5, x, mag1);
    cplx m2 = kummer_m(0.5 * (1.0 - nu), 1.5, x, mag2);
    double A = rgamma(0.5 * (1.0 - nu));
    double B = std::sqrt(2.0) * rgamma(-0.5 * nu);
    cplx bracket = A * m1 - B * z * m2;
    double bracket_mag = std::fabs(A) * mag1 + std::fabs(B) * std::abs(z) * mag2;
    WeberValue out;
    out.value = std::pow(2.0, 0.5 * nu) * sqrt_pi * std::exp(-0.25 * z * z) * bracket;
    // cancellation estimate: lost digits = log10(bracket_mag / |bracket|)
    out.precision_loss =
        bracket_mag > 0.0 && std::abs(bracket) < 1e-6 * bracket_mag;
    return out;
}

WeberValue parabolic_cylinder_D_prime(double nu, cplx z) {
    WeberValue d0 = parabolic_cylinder_D(nu, z);
    WeberValue d1 = parabolic_cylinder_D(nu - 1.0, z);
    WeberValue out;
    out.value = -0.5 * z * d0.value + nu * d1.value;
    out.precision_loss = d0.precision_loss || d1.precision_loss;
    return out;
}

cplx weber_wronskian(double nu, cplx z) {
    cplx f = parabolic_cylinder_D(nu, z).value;
    cplx fp = parabolic_cylinder_D_prime(nu, z).value;
    cplx g = parabolic_cylinder_D(nu, -z).value;
    cplx gp = -parabolic_cylinder_D_prime(nu, -z).value; // chain rule
    return f * gp - g * fp;
}

} // namespace andreev
