#pragma once

#include <map>
#include <optional>

#include "mop/matrix.hpp"

namespace mop {

// Right-acting matrix differential operator sum_j dx^j A_j(x) in normal form:
// dx powers on the left, coefficients on the right, highest stored coefficient
// nonzero. A function F acts as F * D = sum_j F^(j) A_j, which forces the
// commutation rule A(x) dx = dx A(x) + A'(x).
class DiffOp {
public:
    DiffOp() : rows_(1), cols_(1) {}
    DiffOp(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows <= 0 || cols <= 0) throw arith_error("bad operator shape");
    }

    static DiffOp zero(int n) { return DiffOp(n, n); }
    static DiffOp identity(int n) { return from_coeff(0, cmat_to_rf(CMat::identity(n))); }
    // dx^k times the identity
    static DiffOp partial(int n = 1, int k = 1) {
        return from_coeff(k, cmat_to_rf(CMat::identity(n)));
    }
    // multiplication operator by a matrix of rational functions
    static DiffOp mult(const RFMat& a) { return from_coeff(0, a); }
    static DiffOp mult(const RatFun& f) {
        RFMat m(1, 1);
        m.at(0, 0) = f;
        return from_coeff(0, m);
    }
    static DiffOp from_coeff(int order, const RFMat& a) {
        DiffOp d(a.rows(), a.cols());
        d.set_coeff(order, a);
        return d;
    }
    // scalar operator c * dx^k
    static DiffOp term(int k, const RatFun& c) {
        RFMat m(1, 1);
        m.at(0, 0) = c;
        return from_coeff(k, m);
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_scalar() const { return rows_ == 1 && cols_ == 1; }
    bool is_zero() const { return terms_.empty(); }
    // order of the zero operator is the sentinel -1
    int order() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

    RFMat coeff(int j) const {
        auto it = terms_.find(j);
        if (it != terms_.end()) return it->second;
        return RFMat(rows_, cols_);
    }
    void set_coeff(int j, const RFMat& a);
    const std::map<int, RFMat>& terms() const { return terms_; }

    DiffOp operator-() const;
    DiffOp& operator+=(const DiffOp& o);
    DiffOp& operator-=(const DiffOp& o);
    friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
    friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
    friend DiffOp operator*(const DiffOp& a, const DiffOp& b);
    friend bool operator==(const DiffOp& a, const DiffOp& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const DiffOp& a, const DiffOp& b) { return !(a == b); }

    DiffOp scaled(const CRat& s) const;
    DiffOp scaled(const RatFun& s) const;  // multiplies every coefficient on the left by s(x)

    // right action on a matrix of rational functions: F * D = sum F^(j) A_j
    RFMat apply(const RFMat& f) const;
    PolyMat apply_poly(const PolyMat& f) const;  // errors when result is not polynomial

    // formal adjoint: skew-linear anti-automorphism with dx -> -dx and
    // coefficients conjugate-transposed
    DiffOp formal_star() const;

    // the automorphism dx -> dx + s(x), identity on coefficients
    DiffOp substitute_partial(const RatFun& s) const;

    // promote a 1x1 operator to size n (coefficients times identity)
    DiffOp promoted(int n) const;

    bool has_polynomial_coeffs() const;
    int max_coeff_degree() const;  // max degree over polynomial coefficients

private:
    int rows_, cols_;
    std::map<int, RFMat> terms_;
};

DiffOp op_mul(const DiffOp& a, const DiffOp& b);
DiffOp commutator(const DiffOp& a, const DiffOp& b);  // Ad_a(b) = ab - ba
DiffOp ad_power(const DiffOp& a, const DiffOp& b, int k);

struct DegreeFiltrationWitness {
    int order;
    int row, col;
};

// true iff every A_j is polynomial with deg A_j <= j; otherwise returns the
// offending coefficient position
struct DegreeFiltrationResult {
    bool preserving;
    std::optional<DegreeFiltrationWitness> witness;
};
DegreeFiltrationResult is_degree_filtration_preserving(const DiffOp& d);

}  // namespace mop
