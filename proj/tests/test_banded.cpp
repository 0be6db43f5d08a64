#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "core/banded.hpp"

using namespace andreev;

namespace {

BandMatrix random_band(int n, int kl, int ku, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    BandMatrix A;
    A.init(n, kl, ku);
    for (int j = 0; j < n; ++j)
        for (int i = std::max(0, j - ku); i <= std::min(n - 1, j + kl); ++i)
            A.at(i, j) = cplx(u(rng), u(rng));
    // diagonal dominance keeps the conditioning tame for the solve check
    for (int i = 0; i < n; ++i) A.at(i, i) += cplx(6.0, 0.0);
    return A;
}

} // namespace

TEST_CASE("band matvec equals the dense product") {
    int n = 40;
    BandMatrix A = random_band(n, 2, 2, 11);
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<cplx> x(n), y(n), yd(n, cplx(0, 0));
    for (auto& z : x) z = cplx(u(rng), u(rng));
    A.matvec(x.data(), y.data());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) yd[i] += A.get(i, j) * x[j];
    for (int i = 0; i < n; ++i) CHECK(std::abs(y[i] - yd[i]) < 1e-13);
}

TEST_CASE("shifted LU solves to machine precision") {
    int n = 200;
    BandMatrix A = random_band(n, 2, 2, 31);
    cplx sigma(0.37, -0.21);
    std::mt19937_64 rng(32);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<cplx> xt(n), b(n);
    for (auto& z : xt) z = cplx(u(rng), u(rng));
    A.matvec(xt.data(), b.data());
    for (int i = 0; i < n; ++i) b[i] -= sigma * xt[i]; // b = (A - sigma I) xt

    BandLU lu;
    REQUIRE(lu.factor(A, sigma));
    lu.solve(b.data());
    double err = 0.0, nx = 0.0;
    for (int i = 0; i < n; ++i) {
        err += std::norm(b[i] - xt[i]);
        nx += std::norm(xt[i]);
    }
    CHECK(std::sqrt(err / nx) < 1e-12);
}

TEST_CASE("pivoting handles zero leading diagonal") {
    // first diagonal entry of A - sigma I vanishes; partial pivoting must
    // still factor the (nonsingular) matrix
    BandMatrix A;
    A.init(4, 1, 1);
    A.at(0, 0) = 1.0;
    A.at(1, 0) = 2.0;
    A.at(0, 1) = 3.0;
    A.at(1, 1) = 1.0;
    A.at(2, 1) = 1.0;
    A.at(1, 2) = 1.0;
    A.at(2, 2) = 5.0;
    A.at(3, 2) = 1.0;
    A.at(2, 3) = 1.0;
    A.at(3, 3) = 5.0;
    BandLU lu;
    REQUIRE(lu.factor(A, cplx(1.0, 0.0)));
    std::vector<cplx> b = {cplx(1, 0), cplx(0, 0), cplx(0, 0), cplx(0, 0)};
    lu.solve(b.data());
    // residual of (A - I) x = e_0
    std::vector<cplx> y(4);
    A.matvec(b.data(), y.data());
    for (int i = 0; i < 4; ++i) y[i] -= b[i];
    CHECK(std::abs(y[0] - cplx(1, 0)) < 1e-13);
    for (int i = 1; i < 4; ++i) CHECK(std::abs(y[i]) < 1e-13);
}

TEST_CASE("exactly singular shift is reported") {
    BandMatrix A;
    A.init(3, 0, 0);
    A.at(0, 0) = 1.0;
    A.at(1, 1) = 2.0;
    A.at(2, 2) = 3.0;
    BandLU lu;
    CHECK(!lu.factor(A, cplx(2.0, 0.0)));
    CHECK(lu.factor(A, cplx(2.0 + 1e-9, 0.0)));
}

TEST_CASE("inertia of the discrete Laplacian") {
    // eigenvalues 2 - 2 cos(j pi / (n+1)), j = 1..n, all simple
    int n = 25;
    BandMatrix A;
    A.init(n, 1, 1);
    for (int i = 0; i < n; ++i) {
        A.at(i, i) = 2.0;
        if (i + 1 < n) {
            A.at(i + 1, i) = -1.0;
            A.at(i, i + 1) = -1.0;
        }
    }
    auto count_below = [&](double s) {
        int c = 0;
        for (int j = 1; j <= n; ++j)
            if (2.0 - 2.0 * std::cos(j * M_PI / (n + 1)) < s) ++c;
        return c;
    };
    for (double s : {0.1, 0.5, 1.0, 2.5, 3.3, 3.99}) {
        // elimination without pivoting may break down at a shift that makes a
        // leading principal minor singular (s = 1 and 2 do exactly that);
        // callers nudge and retry, so the test does the same
        InertiaResult r = hermitian_inertia(A, s);
        for (int tries = 0; r.breakdown && tries < 4; ++tries)
            r = hermitian_inertia(A, s + (tries + 1) * 1e-9);
        CHECK(!r.breakdown);
        CHECK(r.below == count_below(s));
    }
}

TEST_CASE("inertia with complex couplings") {
    // decoupled 2x2 blocks [[0, c], [conj c, 0]] have eigenvalues +-|c|
    int pairs = 5, n = 2 * pairs;
    cplx c(0.6, 0.8); // |c| = 1
    BandMatrix A;
    A.init(n, 1, 1);
    for (int b = 0; b < pairs; ++b) {
        A.at(2 * b, 2 * b + 1) = c;
        A.at(2 * b + 1, 2 * b) = std::conj(c);
    }
    // sigma = 0 zeroes the whole diagonal (guaranteed breakdown), so probe
    // strictly inside the spectral gap instead
    CHECK(hermitian_inertia(A, 0.5).below == pairs);
    CHECK(hermitian_inertia(A, -0.5).below == pairs);
    CHECK(hermitian_inertia(A, -1.5).below == 0);
    CHECK(hermitian_inertia(A, 1.5).below == n);
}

TEST_CASE("inertia breakdown at an exact eigenvalue") {
    BandMatrix A;
    A.init(3, 1, 1);
    A.at(0, 0) = 1.0;
    A.at(1, 1) = 2.0;
    A.at(2, 2) = 3.0;
    InertiaResult r = hermitian_inertia(A, 2.0);
    CHECK(r.breakdown); // zero pivot, caller must nudge the shift
}
