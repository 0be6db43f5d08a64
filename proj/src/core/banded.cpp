#include "core/banded.hpp"

#include <algorithm>
#include <cmath>

namespace andreev {

void BandMatrix::matvec(const cplx* x, cplx* y) const {
    for (int i = 0; i < n; ++i) y[i] = cplx(0.0, 0.0);
    for (int j = 0; j < n; ++j) {
        int ilo = std::max(0, j - ku), ihi = std::min(n - 1, j + kl);
        const cplx* col = &a[(size_t)j * (kl + ku + 1)];
        for (int i = ilo; i <= ihi; ++i) y[i] += col[ku + i - j] * x[j];
    }
}

bool BandLU::factor(const BandMatrix& A, cplx sigma) {
    n_ = A.n;
    kl_ = A.kl;
    kuw_ = A.kl + A.ku;
    ldab_ = 2 * kl_ + A.ku + 1;
    ab_.assign((size_t)ldab_ * n_, cplx(0.0, 0.0));
    ipiv_.assign(n_, 0);
    for (int j = 0; j < n_; ++j) {
        int ilo = std::max(0, j - A.ku), ihi = std::min(n_ - 1, j + A.kl);
        for (int i = ilo; i <= ihi; ++i) at(i, j) = A.get(i, j);
        at(j, j) -= sigma;
    }
    for (int j = 0; j < n_; ++j) {
        int imax = std::min(n_ - 1, j + kl_);
        int p = j;
        double best = std::abs(at(j, j));
        for (int i = j + 1; i <= imax; ++i) {
            double v = std::abs(at(i, j));
            if (v > best) {
                best = v;
                p = i;
            }
        }
        ipiv_[j] = p;
        if (best == 0.0) return false;
        int cmax = std::min(n_ - 1, j + kuw_);
        if (p != j)
            for (int c = j; c <= cmax; ++c) std::swap(at(j, c), at(p, c));
        cplx piv = at(j, j);
        for (int i = j + 1; i <= imax; ++i) {
            cplx l = at(i, j) / piv;
            at(i, j) = l;
            if (l != cplx(0.0, 0.0))
                for (int c = j + 1; c <= cmax; ++c) at(i, c) -= l * at(j, c);
        }
    }
    return true;
}

void BandLU::solve(cplx* b) const {
    for (int j = 0; j < n_; ++j) {
        if (ipiv_[j] != j) std::swap(b[j], b[ipiv_[j]]);
        int imax = std::min(n_ - 1, j + kl_);
        cplx bj = b[j];
        for (int i = j + 1; i <= imax; ++i) b[i] -= at(i, j) * bj;
    }
    for (int j = n_ - 1; j >= 0; --j) {
        b[j] /= at(j, j);
        cplx bj = b[j];
        int ilo = std::max(0, j - kuw_);
        for (int i = ilo; i < j; ++i) b[i] -= at(i, j) * bj;
    }
}

InertiaResult hermitian_inertia(const BandMatrix& A, double sigma) {
    // lower-band working copy of A - sigma I, eliminated column by column;
    // pivots stay real for Hermitian input
    int n = A.n, bw = A.kl;
    std::vector<cplx> b((size_t)(bw + 1) * n, cplx(0.0, 0.0));
    auto e = [&](int i, int j) -> cplx& { return b[(size_t)j * (bw + 1) + (i - j)]; };
    for (int j = 0; j < n; ++j) {
        for (int i = j; i <= std::min(n - 1, j + bw); ++i) e(i, j) = A.get(i, j);
        e(j, j) -= sigma;
    }
    InertiaResult out;
    double scale = 0.0;
    for (int j = 0; j < n; ++j) scale = std::max(scale, std::abs(e(j, j)));
    double tiny = 1e-300 + 1e-18 * scale;
    for (int j = 0; j < n; ++j) {
        double d = e(j, j).real();
        if (std::fabs(d) < tiny) {
            out.breakdown = true;
            return out;
        }
        if (d < 0.0) ++out.below;
        int imax = std::min(n - 1, j + bw);
        for (int i2 = j + 1; i2 <= imax; ++i2) {
            cplx l2 = e(i2, j) / d; // row factor against conj later
            for (int i1 = i2; i1 <= imax; ++i1)
                e(i1, i2) -= e(i1, j) * std::conj(l2);
        }
    }
    return out;
}

} // namespace andreev
