#pragma once

#include <vector>

#include "core/banded.hpp"
#include "core/profile.hpp"

namespace andreev {

// 2nd-order finite differences on [-X, X], Dirichlet ends, N grid cells
// (N-1 interior nodes), unknowns interleaved (u_j, v_j) so the matrix is
// banded with kl = ku = 2.  Exterior complex scaling
//   x -> x_s + e^{i theta}(x - x_s) for |x| > x_s
// enters in flux form with the slope sampled at cell midpoints and nodes
// weighted by the average adjacent slope; the symmetrized stencil keeps the
// matrix complex symmetric, and exactly Hermitian at theta = 0.
struct DiscretizedOperator {
    BandMatrix M;          // 2(N-1) square
    std::vector<double> x; // interior nodes
    double dx = 0.0;
    double X = 0.0;
    double h = 0.0;
    double theta = 0.0;
    double x_scale_start = 0.0;
    double delta0 = 0.0; // kept for shift-perturbation scale
};

struct DiscretizeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

DiscretizedOperator discretize(const Profile& p, double h, double X, int N,
                               double theta = 0.0, double x_scale_start = -1.0);

// grid cells so that max wavenumber * dx ~ kdx_target at the window top
int cells_for_kdx(const Profile& p, double h, double X, double kdx_target,
                  double e_max);

} // namespace andreev
