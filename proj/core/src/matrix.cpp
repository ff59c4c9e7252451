#include "mop/matrix.hpp"

namespace mop {

CMat poly_mat_coeff(const PolyMat& m, int k) {
    CMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j).coeff(k);
    return r;
}

PolyMat cmat_to_poly(const CMat& m) {
    return m.map([](const CRat& c) { return Poly(c); });
}

RFMat cmat_to_rf(const CMat& m) {
    return m.map([](const CRat& c) { return RatFun(c); });
}

RFMat poly_to_rf(const PolyMat& m) {
    return m.map([](const Poly& p) { return RatFun(p); });
}

PolyMat rf_to_poly(const RFMat& m) {
    return m.map([](const RatFun& f) { return f.as_poly(); });
}

CMat rf_to_cmat(const RFMat& m) {
    return m.map([](const RatFun& f) { return f.as_constant(); });
}

int poly_mat_degree(const PolyMat& m) {
    int d = -1;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) d = std::max(d, m.at(i, j).degree());
    return d;
}

CMat eval_poly_mat(const PolyMat& m, const CRat& x) {
    return m.map([&](const Poly& p) { return p.eval(x); });
}

bool is_positive_definite(const CMat& m) {
    if (!is_hermitian(m)) return false;
    int n = m.rows();
    for (int k = 1; k <= n; ++k) {
        CMat minor(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) minor.at(i, j) = m.at(i, j);
        CRat d = determinant(minor);
        if (!d.is_real() || d.re() <= 0) return false;
    }
    return true;
}

}  // namespace mop
