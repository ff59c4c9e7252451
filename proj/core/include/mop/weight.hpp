#pragma once

#include <map>
#include <optional>
#include <string>

#include "mop/cert.hpp"
#include "mop/diffop.hpp"

namespace mop {

enum class KernelKind { Hermite, Laguerre, Jacobi };

// Scalar Pearson kernel f(x) with rational logarithmic derivative s = f'/f:
//   Hermite   exp(-x^2)             on (-inf, inf),  s = -2x
//   Laguerre  x^b exp(-x)           on (0, inf),     s = b/x - 1
//   Jacobi    (1-x)^a (1+x)^b       on (-1, 1),      s = -a/(1-x) + b/(1+x)
class ScalarKernel {
public:
    static ScalarKernel hermite();
    static ScalarKernel laguerre(const Rat& b);
    static ScalarKernel jacobi(const Rat& a, const Rat& b);

    KernelKind kind() const { return kind_; }
    const Rat& param_a() const { return a_; }
    const Rat& param_b() const { return b_; }

    const RatFun& log_derivative() const { return s_; }
    // the classical second-order operator with this kernel's orthogonal
    // polynomials as eigenfunctions (1x1)
    DiffOp classical_operator() const;

    // finite support endpoints, when any
    std::optional<Rat> left_endpoint() const;
    std::optional<Rat> right_endpoint() const;
    // a point in the interior of the support, for spot checks
    Rat interior_point(int k) const;  // k-th of a fixed family

    // largest m for which moments exist (nullopt = all)
    bool moments_exist_up_to(int m) const;

    std::string describe() const;

    friend bool operator==(const ScalarKernel& x, const ScalarKernel& y) {
        return x.kind_ == y.kind_ && x.a_ == y.a_ && x.b_ == y.b_;
    }

private:
    ScalarKernel(KernelKind k, Rat a, Rat b);
    KernelKind kind_;
    Rat a_, b_;
    RatFun s_;
};

// Weight matrix W(x) = f(x) Q(x): scalar Pearson kernel times a polynomial
// matrix factor, Hermitian and positive definite on the support.
class Weight {
public:
    Weight(ScalarKernel kernel, RFMat q);

    int size() const { return q_.rows(); }
    const ScalarKernel& kernel() const { return kernel_; }
    const RFMat& factor() const { return q_; }
    const RFMat& factor_inverse() const { return qinv_; }

    std::string describe() const;

private:
    ScalarKernel kernel_;
    RFMat q_, qinv_;
};

// formal W-adjoint: dagger(D) = W D* W^{-1}, computed in rational arithmetic
// through the kernel conjugation dx -> dx + s
DiffOp formal_dagger(const DiffOp& d, const Weight& w);
bool is_w_symmetric(const DiffOp& d, const Weight& w);

// Jacobi intertwining operator t = dx (1-x^2) + b - a - (b+a+2)x, together
// with its two defining exact identities against the Jacobi operators
// e_{a,b} and e_{a+1,b+1}. Identity failure is surfaced, never swallowed.
struct JacobiIntertwiner {
    DiffOp t;
    Certificate factors_e;   // e_{a,b} = dx t
    Certificate shifts_e;    // e_{a+1,b+1} - (b+a+2) = t dx
};
JacobiIntertwiner jacobi_intertwiner(const Rat& a, const Rat& b);

// built-in registry
Weight make_hermite_2x2(const Rat& a);
Weight make_laguerre_2x2(const Rat& a, const Rat& b);
Weight make_jacobi_2x2(const Rat& a, const Rat& r);
Weight make_scalar_weight(const ScalarKernel& k);
// lookup by registry name ("hermite-2x2", "laguerre-2x2", "jacobi-2x2",
// "hermite", "laguerre", "jacobi") with named rational parameters
Weight make_weight(const std::string& name, const std::map<std::string, Rat>& params);

}  // namespace mop
