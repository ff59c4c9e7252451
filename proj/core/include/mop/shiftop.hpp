#pragma once

#include <map>

#include "mop/mopseq.hpp"

namespace mop {

// Banded shift operator in n, acting on sequences indexed by the naturals:
//   (M . a)(n) = sum_d M_d(n) a(n+d),   a(k) = 0 for k < 0.
// Coefficients are stored as exact matrix values on the window n = 0..n_hi;
// every product shrinks the window by the forward reach of the left factor,
// and that bookkeeping is explicit in window().
class ShiftOp {
public:
    ShiftOp() : n_(0), n_hi_(-1) {}
    ShiftOp(int size, int n_hi) : n_(size), n_hi_(n_hi) {}

    int size() const { return n_; }
    int window() const { return n_hi_; }
    bool window_empty() const { return n_hi_ < 0; }

    int max_forward() const;   // largest diagonal offset (0 when none positive)
    int min_backward() const;  // smallest diagonal offset (0 when none negative)

    CMat coeff(int d, int n) const;
    void set_coeff(int d, int n, const CMat& value);
    const std::map<int, std::vector<CMat>>& diagonals() const { return diag_; }

    bool is_zero() const;

    ShiftOp operator-() const;
    friend ShiftOp operator+(const ShiftOp& a, const ShiftOp& b);
    friend ShiftOp operator-(const ShiftOp& a, const ShiftOp& b);
    friend ShiftOp operator*(const ShiftOp& a, const ShiftOp& b);
    ShiftOp scaled(const CRat& s) const;

    // the * of the shift algebra: Hermitian conjugate coefficients, D <-> D*
    ShiftOp star() const;
    // conjugation n -> S(n) M S(n+d)^{-1} by a sequence of nonsingular matrices
    ShiftOp conjugated_by(const std::vector<CMat>& s) const;

    // action on the first (len) polynomial matrices of a sequence; entry n of
    // the result is valid for n <= min(window, len-1-max_forward)
    std::vector<PolyMat> apply(const std::vector<PolyMat>& p) const;

    ShiftOp truncated(int new_hi) const;

private:
    void prune();
    int n_;
    int n_hi_;
    std::map<int, std::vector<CMat>> diag_;  // d -> values for n = 0..n_hi_
};

ShiftOp commutator(const ShiftOp& a, const ShiftOp& b);

// tridiagonal L with L . P(x,n) = P(x,n) x, built from the recurrence
ShiftOp build_shift_l(const MOPSequence& seq);

// W-adjoint of a shift operator: H(n) M* H(n)^{-1} with H(n) the norms
ShiftOp discrete_dagger(const ShiftOp& m, const MOPSequence& seq);

}  // namespace mop
