#include "core/profile.hpp"

#include <cmath>

namespace andreev {

namespace {

// quintic smoothstep: C^2 at both ends, s(1/2) = 1/2, max slope 15/8 at t = 1/2
double smoothstep5(double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    return t * t * t * (10.0 + t * (-15.0 + 6.0 * t));
}

double smoothstep5_prime(double t) {
    if (t <= 0.0 || t >= 1.0) return 0.0;
    double u = t * (1.0 - t);
    return 30.0 * u * u;
}

} // namespace

Profile::Profile(double delta0, double mu0, double phi, double x1, double x2,
                 double lead_half_length, RampShape ramp)
    : delta0_(delta0), mu0_(mu0), phi_(phi), x1_(x1), x2_(x2),
      lead_half_length_(lead_half_length), ramp_(ramp) {
    if (!(delta0 > 0.0))
        throw ProfileError("delta0 must be positive");
    if (!(mu0 > delta0))
        throw ProfileError("mu0 must exceed delta0 (gap below the Fermi plateau)");
    if (!(x1 > 0.0))
        throw ProfileError("x1 must be positive");
    if (!(x1 < lead_half_length && lead_half_length < x2))
        throw ProfileError("geometry must satisfy 0 < x1 < L < x2");
}

double Profile::delta(double x) const {
    double ax = std::fabs(x);
    if (ax <= x1_) return 0.0;
    if (ax >= x2_) return delta0_;
    double t = (ax - x1_) / (x2_ - x1_);
    return delta0_ * (ramp_ == RampShape::QuinticSmoothstep ? smoothstep5(t) : t);
}

double Profile::mu(double) const { return mu0_; }

double Profile::phase(double x) const {
    if (x > 0.0) return phi_;
    if (x < 0.0) return -phi_;
    return 0.0;
}

double Profile::delta_prime(double x) const {
    double ax = std::fabs(x);
    if (ax <= x1_ || ax >= x2_) return 0.0;
    double w = x2_ - x1_;
    double t = (ax - x1_) / w;
    double s = (x >= 0.0) ? 1.0 : -1.0;
    double d = (ramp_ == RampShape::QuinticSmoothstep) ? smoothstep5_prime(t) : 1.0;
    return s * delta0_ * d / w;
}

} // namespace andreev
