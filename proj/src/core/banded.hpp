#pragma once

#include <complex>
#include <vector>

namespace andreev {

using cplx = std::complex<double>;

// General complex band matrix, assembly form (no factorization workspace).
// Column-major: a[j*(kl+ku+1) + (ku + i - j)] holds A(i,j) for -ku <= i-j <= kl.
struct BandMatrix {
    int n = 0, kl = 0, ku = 0;
    std::vector<cplx> a;

    void init(int n_, int kl_, int ku_) {
        n = n_;
        kl = kl_;
        ku = ku_;
        a.assign((size_t)(kl + ku + 1) * n, cplx(0.0, 0.0));
    }
    cplx& at(int i, int j) { return a[(size_t)j * (kl + ku + 1) + (ku + i - j)]; }
    cplx get(int i, int j) const {
        int d = i - j;
        if (d < -ku || d > kl || i < 0 || j < 0 || i >= n || j >= n)
            return cplx(0.0, 0.0);
        return a[(size_t)j * (kl + ku + 1) + (ku + d)];
    }
    void matvec(const cplx* x, cplx* y) const;
};

// LU of (A - sigma I) with partial pivoting; U bandwidth grows to kl+ku.
class BandLU {
public:
    // returns false on exact zero pivot (singular to machine precision)
    bool factor(const BandMatrix& A, cplx sigma);
    void solve(cplx* b) const; // in place
    int n() const { return n_; }

private:
    int n_ = 0, kl_ = 0, kuw_ = 0, ldab_ = 0; // kuw = kl+ku (fill-in band)
    std::vector<cplx> ab_;                    // ldab x n, ldab = 2kl+ku+1
    std::vector<int> ipiv_;
    cplx& at(int i, int j) { return ab_[(size_t)j * ldab_ + (kuw_ + i - j)]; }
    const cplx& at(int i, int j) const { return ab_[(size_t)j * ldab_ + (kuw_ + i - j)]; }
};

// Number of eigenvalues of a Hermitian band matrix below sigma, by counting
// negative pivots of the LDL^H elimination (no pivoting; breakdown reported
// so the caller can nudge sigma).
struct InertiaResult {
    int below = 0;
    bool breakdown = false;
};
InertiaResult hermitian_inertia(const BandMatrix& A, double sigma);

} // namespace andreev
