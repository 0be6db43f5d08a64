#pragma once

#include <complex>

#include "core/profile.hpp"
#include "core/quad.hpp"

namespace andreev {

using cplx = std::complex<double>;

// Bicharacteristic data of one energy in the gap.
struct ClassicalGeometry {
    double energy = 0.0;
    double x0 = 0.0;          // turning point, Delta(x0) = E
    double xi0 = 0.0;         // sqrt(mu(x0))
    double alpha = 0.0;       // local gap slope Delta'(x0)
    double beta = 0.0;        // sqrt(alpha) * (2 xi0)^(-3/2)
    double action_plus = 0.0; // S+(E) over [-x0, x0]
    double action_minus = 0.0;
    double barrier_finite = 0.0; // integral of Im sqrt(K+) over [x0, x2]
    double barrier_tail_rate = 0.0; // Im sqrt(mu0 + i sqrt(Delta0^2-E^2)), per unit length beyond x2
    double quad_error = 0.0;   // worst achieved quadrature error estimate
    bool quad_converged = true;
};

struct GeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// K±(x) = mu(x) ± sqrt(E² − Δ(x)²), continued as mu ± i sqrt(Δ²−E²) where Δ > E.
std::pair<cplx, cplx> kinetic_branches(const Profile& p, double E, double x);

// Bisection on the monotone ramp; |Delta(x0) − E| ≤ tol_root guaranteed.
double turning_point(const Profile& p, double E, double tol_root = 1e-12);

// S±(E) = ∫_{−x0}^{x0} sqrt(K±) dx.  The sqrt branch-point of the derivative
// at ±x0 is removed by the substitution u² = x0 − x before the adaptive rule.
std::pair<QuadResult, QuadResult> action_integrals(const Profile& p, double E,
                                                   double tol_quad = 1e-12);

// Finite barrier part ∫_{x0}^{x2} Im sqrt(K+) dx (same substitution at x0)
// plus the constant exterior rate; the canonical exponent Θ(E) used by the
// width estimate is the finite part alone (the tail describes bank decay,
// not the ramp barrier, and vanishes with it as E → Δ0).
struct BarrierExponent {
    double finite = 0.0;
    double tail_rate = 0.0;
    QuadResult quad;
    double total(double x_end, double x2) const {
        return finite + tail_rate * (x_end > x2 ? x_end - x2 : 0.0);
    }
};
BarrierExponent barrier_exponent(const Profile& p, double E, double tol_quad = 1e-12);

// alpha by centered difference (independent of Profile::delta_prime), plus
// xi0 and the scaling parameter beta.
struct LocalSlope {
    double alpha, beta, xi0;
};
LocalSlope local_slope(const Profile& p, double E, double tol_root = 1e-12);

// Full bundle.
ClassicalGeometry classical_geometry(const Profile& p, double E,
                                     double tol_root = 1e-12,
                                     double tol_quad = 1e-12);

} // namespace andreev
