#pragma once

#include "mop/cert.hpp"
#include "mop/fourier.hpp"

namespace mop {

// ---------------------------------------------------------------------------
// Orthogonal systems: W-symmetric V_1..V_N with V_i V_j = 0 for i != j and
// V_1+...+V_N a non-zero divisor (certified through det of its Fourier image).
// Centrality of the sum is a separate, optional certificate.
// ---------------------------------------------------------------------------

struct OrthSystem {
    std::vector<DiffOp> v;
    std::vector<PolyMat> lambda;
    PolyMat lambda_sum;
    std::vector<int> orders;
    std::vector<Certificate> certificates;
    bool core_ok = false;  // membership + symmetry + pairwise zero + non-zero-divisor
    int rank_lower_bound = 0;
};

OrthSystem verify_orthogonal_system(const std::vector<DiffOp>& vs, const Weight& w,
                                    const MOPSequence& seq, int n_win,
                                    const std::vector<DiffOp>& centrality_generators = {});

// ---------------------------------------------------------------------------
// Cyclic module generators: minimal-order row operator u (1 x N) with
// u V_j = 0 for all j != i, found by an incremental order/degree ansatz and
// exact kernel computation; normalized so the first nonzero entry of the
// leading coefficient row is monic.
// ---------------------------------------------------------------------------

struct CyclicGeneratorResult {
    bool found = false;
    DiffOp u;
    int order = -1;
    std::string detail;
};

CyclicGeneratorResult cyclic_generator(const std::vector<DiffOp>& vs, int i, int order_cap,
                                       int degree_cap = 8);

// rows are the u_i; U(x) collects the leading coefficient rows
struct UData {
    DiffOp u_op;
    RFMat u_x;
    std::vector<int> orders;
    bool invertible = false;
};

UData build_u(const std::vector<DiffOp>& us);

// U(x) W(x) U(x)^* as f(x) times a rational matrix; must come out diagonal
struct DiagonalizeResult {
    bool diagonal = false;
    std::vector<RatFun> rho;  // r_i = f * rho_i
    RFMat product;            // U Q U^*
    std::string detail;
};

DiagonalizeResult diagonalize_weight(const RFMat& u_x, const Weight& w);

// scalar v with v u = u V, solved top order down; the residual is rechecked
struct ComputeViResult {
    bool found = false;
    DiffOp v;
    std::string detail;
};

ComputeViResult compute_vi(const DiffOp& u, const DiffOp& big_v);

// ---------------------------------------------------------------------------
// Polynomial expression v = p(d) in the commutative subalgebra C[d], by
// greedy leading-coefficient division. Fails when v is only Darboux
// conjugate, not equal, to a polynomial in d.
// ---------------------------------------------------------------------------

struct ExpressResult {
    bool ok = false;
    Poly p;  // in the indeterminate t
    std::string detail;
};

ExpressResult express_in_classical(const DiffOp& v, const DiffOp& d);

DiffOp poly_at_operator(const Poly& p, const DiffOp& a);

// ---------------------------------------------------------------------------
// Adjoint and ODE certificates for the kernel-tracked b_i = u W u^* and
// r_i: (a) v b = b v*, (b) the first-order ODE residual for r_i, using the
// logarithmic derivative r'/r = s + rho'/rho, (c) endpoint vanishing of the
// leading coefficient of v at finite support endpoints.
// ---------------------------------------------------------------------------

struct AdjointChecks {
    Certificate symmetry;
    Certificate ode_residual;
    Certificate endpoint;
    DiffOp b_hat;  // rational part of b = f * b_hat
    RatFun rho;    // rational part of r = f * rho (leading coefficient of b_hat)
};

AdjointChecks adjoint_symmetry_checks(const DiffOp& u, const DiffOp& v, const Weight& w);

// ---------------------------------------------------------------------------
// Exceptional degrees: n <= n_max admitting NO degree-n polynomial
// eigenfunction, decided by exact linear algebra after clearing denominators.
// Requires the operator to be tame at infinity (deg(a_j q) <= deg q + j).
// ---------------------------------------------------------------------------

std::vector<int> exceptional_degrees(const DiffOp& d, int n_max);

// ---------------------------------------------------------------------------
// Darboux verification pieces
// ---------------------------------------------------------------------------

DiffOp diag_op(const std::vector<DiffOp>& scalar_ops);

// h d = dt h
Certificate check_conjugacy(const DiffOp& h, const DiffOp& d, const DiffOp& dt,
                            const std::string& name);
// U D = diag(targets) U
Certificate check_intertwine(const DiffOp& u_op, const DiffOp& d,
                             const std::vector<DiffOp>& targets, const std::string& name);
// T Tt = diag(p_i(d_i) q(p_i(d_i))) and Tt E_ii T = V_i q(V_i)
std::vector<Certificate> check_darboux_factorization(const DiffOp& t, const DiffOp& tt,
                                                     const std::vector<DiffOp>& ds,
                                                     const std::vector<Poly>& ps, const Poly& q,
                                                     const std::vector<DiffOp>& vs);

// C(n) Pt(x,n) = P(x,n) . (T F): solves C(n) as the leading coefficient and
// certifies the exact residual; reports how many C(n) are singular
struct SequenceTransformResult {
    bool ok = false;
    std::vector<CMat> c;
    int singular_count = 0;
    std::string detail;
};

SequenceTransformResult check_sequence_transform(const MOPSequence& seq, const MOPSequence& seq_t,
                                                 const DiffOp& t, const RFMat& f, int n_win);

// ---------------------------------------------------------------------------
// Exact completion: the unique degree-filtration-preserving operator of the
// given order with Fourier image lambda, when one exists.
// ---------------------------------------------------------------------------

struct CompletionResult {
    bool found = false;
    bool unique = false;
    DiffOp d;
    PolyMat lambda;
    std::string detail;
};

CompletionResult complete_dw_operator(const MOPSequence& seq, const PolyMat& lambda, int order,
                                      int n_win);

// Joint reconstruction with some eigenvalue entries unknown: finds the
// operator of the given order, optionally W-symmetric, whose Fourier image
// agrees with lambda_known outside the masked entries. The masked entries
// are solved as polynomials in n of degree <= order. Real coefficients only.
CompletionResult complete_dw_operator_masked(const MOPSequence& seq, const PolyMat& lambda_known,
                                             const std::vector<std::pair<int, int>>& unknown,
                                             int order, int n_win, bool w_symmetric);

}  // namespace mop
