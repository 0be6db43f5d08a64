#pragma once

#include <stdexcept>
#include <string>

namespace andreev {

enum class RampShape { QuinticSmoothstep, Linear };

// Symmetric SNS junction profile on the real line:
//   gap      Delta(x) = 0 for |x| <= x1, Delta0 for |x| >= x2, monotone ramp between
//   mu       constant plateau mu0 everywhere (mu0 > Delta0 keeps both branches propagating)
//   phase    phi(x) = sgn(x) * phi, piecewise constant
// Immutable after construction; safe to share across threads.
class Profile {
public:
    Profile(double delta0, double mu0, double phi, double x1, double x2,
            double lead_half_length, RampShape ramp);

    double delta(double x) const;
    double mu(double x) const;
    double phase(double x) const;

    // d Delta / dx, analytic (used by tests; production slope goes through
    // the centered-difference local_slope so the two stay independent)
    double delta_prime(double x) const;

    double delta0() const { return delta0_; }
    double mu0() const { return mu0_; }
    double phi() const { return phi_; }
    double x1() const { return x1_; }
    double x2() const { return x2_; }
    double lead_half_length() const { return lead_half_length_; }
    RampShape ramp() const { return ramp_; }

private:
    double delta0_, mu0_, phi_, x1_, x2_, lead_half_length_;
    RampShape ramp_;
};

struct ProfileError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace andreev
