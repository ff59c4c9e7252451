#include "mop/mopseq.hpp"

namespace mop {

MOPSequence MOPSequence::build(const Weight& w, int n_max) {
    if (n_max < 0) throw arith_error("n_max must be nonnegative");
    MOPSequence seq(w);
    seq.n_max_ = n_max;
    const int n_dim = w.size();
    seq.M_ = matrix_moments(w, 2 * n_max + 16);

    // P(n) = x^n I + sum_{k<n} X_k x^k with <P(n), x^j I> = 0 for j < n.
    // The moment conditions give the block Hankel system
    //   sum_k X_k M_{k+j} = -M_{n+j},  j = 0..n-1,
    // with one scalar system shared by all rows of P(n).
    for (int n = 0; n <= n_max; ++n) {
        PolyMat p(n_dim, n_dim);
        if (n == 0) {
            for (int i = 0; i < n_dim; ++i) p.at(i, i) = Poly(1);
        } else {
            int dim = n * n_dim;
            CMat a(dim, dim), rhs(dim, n_dim);
            for (int j = 0; j < n; ++j)
                for (int c = 0; c < n_dim; ++c) {
                    int row = j * n_dim + c;
                    for (int k = 0; k < n; ++k)
                        for (int b = 0; b < n_dim; ++b)
                            a.at(row, k * n_dim + b) = seq.M_[k + j].at(b, c);
                    for (int i = 0; i < n_dim; ++i) rhs.at(row, i) = -seq.M_[n + j].at(i, c);
                }
            CMat x;
            try {
                x = linear_solve(a, rhs);
            } catch (const arith_error&) {
                throw arith_error("singular Hankel system at n = " + std::to_string(n));
            }
            for (int i = 0; i < n_dim; ++i)
                for (int j = 0; j < n_dim; ++j) {
                    std::vector<CRat> coeffs(n + 1);
                    for (int k = 0; k < n; ++k) coeffs[k] = x.at(k * n_dim + j, i);
                    coeffs[n] = (i == j) ? CRat(1) : CRat(0);
                    p.at(i, j) = Poly(std::move(coeffs));
                }
        }
        seq.P_.push_back(std::move(p));

        // H(n) = <P(n), x^n I> by orthogonality
        CMat h(n_dim, n_dim);
        for (int k = 0; k <= n; ++k) h += poly_mat_coeff(seq.P_[n], k) * seq.M_[k + n];
        seq.H_.push_back(std::move(h));
    }

    for (int n = 0; n < n_max; ++n) {
        PolyMat xp = seq.P_[n].map([](const Poly& q) { return q * Poly::x(); });
        seq.B_.push_back(seq.inner_product(xp, seq.P_[n]) * inverse(seq.H_[n]));
        if (n == 0)
            seq.C_.push_back(CMat(n_dim, n_dim));
        else
            seq.C_.push_back(seq.inner_product(xp, seq.P_[n - 1]) * inverse(seq.H_[n - 1]));
    }
    return seq;
}

CMat MOPSequence::inner_product(const PolyMat& a, const PolyMat& b) const {
    int da = poly_mat_degree(a), db = poly_mat_degree(b);
    if (da + db >= static_cast<int>(M_.size()))
        throw arith_error("inner product needs moments beyond the built range");
    CMat out(w_.size(), w_.size());
    for (int k = 0; k <= da; ++k) {
        CMat ak = poly_mat_coeff(a, k);
        if (ak.is_zero()) continue;
        for (int l = 0; l <= db; ++l) {
            CMat bl = poly_mat_coeff(b, l);
            if (bl.is_zero()) continue;
            out += ak * M_[k + l] * bl.conj_transpose();
        }
    }
    return out;
}

PolyMat MOPSequence::recurrence_residual(int n) const {
    if (n < 0 || n >= n_max_) throw arith_error("recurrence index out of range");
    PolyMat xp = P(n).map([](const Poly& q) { return q * Poly::x(); });
    PolyMat res = xp - P(n + 1) - cmat_to_poly(B(n)) * P(n);
    if (n >= 1) res -= cmat_to_poly(C(n)) * P(n - 1);
    return res;
}

}  // namespace mop
