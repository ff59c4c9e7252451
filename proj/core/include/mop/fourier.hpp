#pragma once

#include "mop/shiftop.hpp"

namespace mop {

// Image of a degree-filtration preserving operator under the generalized
// Fourier map: Lambda(n) = sum_j n(n-1)...(n-j+1) A_{j,[j]} with A_{j,[j]}
// the x^j coefficient matrix of A_j(x). Entries are polynomials in n.
PolyMat fourier_image(const DiffOp& d);

CMat eval_lambda(const PolyMat& lambda, long n);

struct DWReport {
    bool accepted = false;
    PolyMat lambda;       // valid when accepted
    int window = 0;       // eigen equation checked exactly for n = 0..window
    int degree_bound = 0; // agreement beyond this many values pins the identity
    int reject_n = -1;
    std::string detail;
};

// Membership test for D(W): accept iff P(x,n) . D = Lambda(n) P(x,n) exactly
// on the window, with Lambda the closed-form Fourier image. Rejection carries
// the first failing n; it is a result, not an error.
DWReport dw_membership(const DiffOp& d, const MOPSequence& seq, int n_win);

struct BandReport {
    ShiftOp band;        // C(n, n+d) as a shift operator on the window
    int fwd_width = 0;   // max coefficient degree of D
    int back_width = -1; // max coefficient degree of the W-adjoint, -1 if not polynomial
    bool band_ok = false;
    bool expansion_ok = false;  // sum_j C(n,j) P(j) reproduces P(n).D exactly
    std::string detail;
};

// Expansion P(x,n) . D = sum_j C(n,j) P(x,j) with
// C(n,j) = <P(n).D, P(j)>_W H(j)^{-1}; checks the band predicted for
// W-adjointable operators with polynomial adjoints.
BandReport band_representation(const DiffOp& d, const MOPSequence& seq, int n_win);

enum class TestStatus { Accept, Reject, Inconclusive };

struct FourierTestReport {
    TestStatus status = TestStatus::Inconclusive;
    int k = -1;  // smallest k with Ad_L^{k+1}(M) = 0 when accepted
    std::string detail;
};

// Left Fourier algebra test: commutators with L must vanish after finitely
// many steps. Window exhaustion before stabilization is inconclusive.
FourierTestReport left_fourier_test(const ShiftOp& m, const ShiftOp& l, int k_max);

}  // namespace mop
