#pragma once

#include "mop/moments.hpp"

namespace mop {

// Monic orthogonal matrix polynomials P(x,n) for a weight, with squared
// norms H(n) = <P(n), P(n)>_W / mu_0 and three-term recurrence matrices:
//   x P(n) = P(n+1) + B(n) P(n) + C(n) P(n-1).
// Everything is exact and normalized by mu_0.
class MOPSequence {
public:
    static MOPSequence build(const Weight& w, int n_max);

    const Weight& weight() const { return w_; }
    int n_max() const { return n_max_; }

    const PolyMat& P(int n) const { return at(P_, n, "P"); }
    const CMat& H(int n) const { return at(H_, n, "H"); }
    const CMat& B(int n) const { return at(B_, n, "B"); }  // n = 0..n_max-1
    const CMat& C(int n) const { return at(C_, n, "C"); }  // n = 1..n_max-1
    const CMat& moment(int m) const { return at(M_, m, "moment"); }
    int moments_available() const { return static_cast<int>(M_.size()) - 1; }

    // <A, B>_W / mu_0 for polynomial matrices
    CMat inner_product(const PolyMat& a, const PolyMat& b) const;

    // recurrence residual x P(n) - P(n+1) - B(n) P(n) - C(n) P(n-1), zero for
    // a consistent sequence
    PolyMat recurrence_residual(int n) const;

private:
    explicit MOPSequence(Weight w) : w_(std::move(w)) {}
    template <typename V>
    static const typename V::value_type& at(const V& v, int n, const char* what) {
        if (n < 0 || n >= static_cast<int>(v.size()))
            throw arith_error(std::string(what) + " index out of built range");
        return v[static_cast<size_t>(n)];
    }
    Weight w_;
    int n_max_ = 0;
    std::vector<CMat> M_, H_, B_, C_;
    std::vector<PolyMat> P_;
};

}  // namespace mop
