#include "core/discretize.hpp"

#include <cmath>

namespace andreev {

DiscretizedOperator discretize(const Profile& p, double h, double X, int N,
                               double theta, double x_scale_start) {
    if (N < 500) throw DiscretizeError("N must be at least 500");
    if (!(X > p.x2())) throw DiscretizeError("X must exceed x2");
    if (!(theta >= 0.0 && theta <= 0.3))
        throw DiscretizeError("theta must lie in [0, 0.3]");
    double xs = x_scale_start < 0.0 ? p.x2() : x_scale_start;
    if (!(xs >= p.x2() && xs < X))
        throw DiscretizeError("x_scale_start must lie in [x2, X)");

    DiscretizedOperator op;
    op.dx = 2.0 * X / N;
    op.X = X;
    op.h = h;
    op.theta = theta;
    op.x_scale_start = xs;
    op.delta0 = p.delta0();
    int n = N - 1; // interior nodes
    op.x.resize(n);
    for (int j = 0; j < n; ++j) op.x[j] = -X + op.dx * (j + 1);

    // contour slope z'(x) at cell midpoints: e^{i theta} beyond +-xs, else 1;
    // potentials need no scaled-coordinate evaluation because scaling starts
    // on the plateau where every coefficient is constant
    cplx eit = std::exp(cplx(0.0, theta));
    std::vector<cplx> smid(N);
    for (int i = 0; i < N; ++i) {
        double xm = -X + op.dx * (i + 0.5);
        smid[i] = (std::fabs(xm) > xs) ? eit : cplx(1.0, 0.0);
    }
    double c = h * h / (op.dx * op.dx);

    op.M.init(2 * n, 2, 2);
    for (int j = 0; j < n; ++j) {
        cplx snode = 0.5 * (smid[j] + smid[j + 1]);
        cplx adiag = c * (1.0 / smid[j] + 1.0 / smid[j + 1]) / snode;
        cplx ke = adiag - p.mu(op.x[j]); // electron kinetic - mu
        cplx off = p.delta(op.x[j]) *
                   std::exp(cplx(0.0, 0.5 * p.phase(op.x[j])));
        op.M.at(2 * j, 2 * j) = ke;
        op.M.at(2 * j + 1, 2 * j + 1) = -ke;
        op.M.at(2 * j, 2 * j + 1) = off;
        op.M.at(2 * j + 1, 2 * j) = std::conj(off);
        if (j + 1 < n) {
            cplx snode_r = 0.5 * (smid[j + 1] + smid[j + 2]);
            cplx aoff = -c / (smid[j + 1] * std::sqrt(snode * snode_r));
            op.M.at(2 * j, 2 * (j + 1)) = aoff;
            op.M.at(2 * (j + 1), 2 * j) = aoff;
            op.M.at(2 * j + 1, 2 * (j + 1) + 1) = -aoff;
            op.M.at(2 * (j + 1) + 1, 2 * j + 1) = -aoff;
        }
    }
    return op;
}

int cells_for_kdx(const Profile& p, double h, double X, double kdx_target,
                  double e_max) {
    double kmax = std::sqrt(p.mu0() + e_max) / h;
    int N = (int)std::ceil(2.0 * X * kmax / kdx_target);
    return std::max(N, 500);
}

} // namespace andreev
