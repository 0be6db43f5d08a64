#pragma once

#include <optional>
#include <vector>

#include "core/discretize.hpp"
#include "core/spectrum.hpp"

namespace andreev {

struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BoundState {
    double energy = 0.0;
    double residual = 0.0; // ||Mv - Ev|| / ||v||
    double boundary_amplitude = 0.0; // |v| at outermost nodes / max|v|
};

// All eigenvalues of the Hermitian (theta = 0) operator inside the window:
// inertia-count bisection isolates each eigenvalue, inverse iteration with a
// banded LU refines it.  Shifts landing on an eigenvalue (factorization
// breakdown) are nudged by 1e-12 * delta0 and retried.
std::vector<BoundState> bound_states(const DiscretizedOperator& op,
                                     std::pair<double, double> window,
                                     double tol_residual = 1e-12);

enum class ResonanceMethod { ComplexScaling, Shooting };

struct Resonance {
    cplx energy{0.0, 0.0};
    double gamma = 0.0;     // max(-2 Im E, 0); raw value recoverable from energy
    ResonanceMethod method = ResonanceMethod::ComplexScaling;
    double theta_used = 0.0;
    double stability = 0.0; // |eigenvalue displacement| under theta -> theta + 0.05
    double residual = 0.0;
    bool escaped = false;     // converged farther than the local spacing from seed
    bool below_floor = false; // |width| indistinguishable from solver noise
    bool converged = false;
    int iterations = 0;
};

// Shift-invert iteration on the theta-scaled matrix, seeded at a real level.
// Fixed-shift until loosely locked (residual < lock_threshold), then Rayleigh
// updates; premature Rayleigh steps get captured by rotated-continuum states,
// hence the two-phase schedule.
Resonance resonance_complex_scaling(const Profile& p, double h, double X, int N,
                                    double theta, double x_scale_start,
                                    double seed, double level_spacing,
                                    bool with_stability = true);

// Single eigenpair of an already assembled operator (used internally and by
// the Richardson wrapper); returns nullopt when iteration fails.
std::optional<std::pair<cplx, double>> shift_invert_eigen(
    const DiscretizedOperator& op, cplx sigma, double tol_residual = 1e-11,
    int max_iter = 60);

// Two-grid Richardson extrapolation of the complex-scaled eigenvalue: runs
// (N, 2N) and combines (4 E_fine - E_coarse) / 3, cancelling the O(dx^2)
// stencil error.  Width floor and escape checks as above.
Resonance resonance_cs_richardson(const Profile& p, double h, double X, int N,
                                  double theta, double x_scale_start,
                                  double seed, double level_spacing,
                                  bool with_stability = true);

} // namespace andreev
