#pragma once

#include <array>

#include "core/profile.hpp"
#include "core/solver.hpp"

namespace andreev {

// Matching-determinant resonance solver, independent of the grid solver.
// The two decaying solution families are propagated as exterior products
// (6-component bivectors), which keeps the determinant well conditioned when
// one basis column would dominate the other.  Bank plateaus and the gapless
// lead are constant-coefficient, so the families start from the exact
// characteristic modes at +-x2 and cross the lead by the exact propagator;
// only the ramps are integrated (adaptive Dormand-Prince 5(4)).  The 4x4
// matching determinant at x = 0 equals the Pluecker pairing of the two
// bivectors there.
Resonance shooting_resonance(const Profile& p, double h, cplx seed,
                             double rk_tol = 1e-12, double newton_tol = 1e-12,
                             int max_newton = 60);

namespace shooting_detail {

using Vec4 = std::array<cplx, 4>;
using Wedge = std::array<cplx, 6>; // pair order (01)(02)(03)(12)(13)(23)
using Mat4 = std::array<std::array<cplx, 4>, 4>;

Wedge wedge2(const Vec4& a, const Vec4& b);
Wedge apply_comp6(const Mat4& T, const Wedge& w);
cplx pluecker_pair(const Wedge& left, const Wedge& right);
double wedge_norm(const Wedge& w);

// characteristic decaying pair on the bank at side = +-1, evaluated at
// x = side * x2; Vec4 layout (u, v, u', v')
std::pair<Vec4, Vec4> bank_modes(const Profile& p, cplx E, double h, int side);

// exact constant-coefficient propagator over the gapless lead, step d
Mat4 lead_transfer(const Profile& p, cplx E, double h, double d);

// first-order system matrix y' = A y at position x
Mat4 system_matrix(const Profile& p, cplx E, double h, double x);

struct IntegrateStats {
    int steps = 0;
    int rejected = 0;
    bool ok = true;
};
// adaptive DP54 on the bivector flow from x_from to x_to (either direction)
IntegrateStats integrate_wedge(const Profile& p, cplx E, double h,
                               double x_from, double x_to, Wedge& w,
                               double rtol);

// normalized matching determinant at x = 0
cplx matching_det(const Profile& p, cplx E, double h, double rtol,
                  bool* ok = nullptr);

} // namespace shooting_detail

} // namespace andreev
