#pragma once

#include <complex>
#include <stdexcept>

namespace andreev {

using cplx = std::complex<double>;

struct WeberIndex {
    double nu;  // E^2 / (4 xi0 alpha h), leading order
    double e1;  // E / (2 xi0)^2
    double t;   // E^2 / (2 xi0 alpha)
};

WeberIndex weber_index(double E, double xi0, double alpha, double h);

struct WeberValue {
    cplx value{0.0, 0.0};
    bool precision_loss = false; // series cancellation ate more than ~6 digits
};

struct WeberDomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Parabolic cylinder D_nu(z), power series about z=0 with Gamma coefficients.
// Supported desk-scale domain |z| <= 30, |nu| <= 30 (rejected outside); the
// series cancels like exp(Re z^2 / 2), so full precision holds only for
// moderate |z| -- the flag reports when that bites.
WeberValue parabolic_cylinder_D(double nu, cplx z);

// d/dz D_nu(z) = -(z/2) D_nu(z) + nu D_{nu-1}(z)
WeberValue parabolic_cylinder_D_prime(double nu, cplx z);

// Wronskian of D_nu(z) and D_nu(-z) in the f g' - g f' convention; equals
// sqrt(2 pi) / Gamma(-nu) for all z.
cplx weber_wronskian(double nu, cplx z);

// 1/Gamma(x) with exact zeros at the poles
double rgamma(double x);

} // namespace andreev
