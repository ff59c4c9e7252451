#include "mop/weight.hpp"

namespace mop {

namespace {

Poly lin(const CRat& c0, const CRat& c1) { return Poly(std::vector<CRat>{c0, c1}); }

RatFun poly_rf(std::vector<CRat> coeffs) { return RatFun(Poly(std::move(coeffs))); }

}  // namespace

ScalarKernel::ScalarKernel(KernelKind k, Rat a, Rat b) : kind_(k), a_(std::move(a)), b_(std::move(b)) {
    switch (kind_) {
        case KernelKind::Hermite:
            s_ = RatFun(lin(CRat(0), CRat(-2)));
            break;
        case KernelKind::Laguerre:
            // b/x - 1
            s_ = RatFun(lin(CRat(b_), CRat(-1)), Poly::x());
            break;
        case KernelKind::Jacobi: {
            // -a/(1-x) + b/(1+x) = ((b-a) - (a+b)x) / (1-x^2)
            Poly num = lin(CRat(b_ - a_), CRat(-(a_ + b_)));
            Poly den(std::vector<CRat>{CRat(1), CRat(0), CRat(-1)});
            s_ = RatFun(num, den);
            break;
        }
    }
}

ScalarKernel ScalarKernel::hermite() { return ScalarKernel(KernelKind::Hermite, 0, 0); }

ScalarKernel ScalarKernel::laguerre(const Rat& b) {
    if (b <= -1) throw arith_error("laguerre kernel requires b > -1");
    return ScalarKernel(KernelKind::Laguerre, 0, b);
}

ScalarKernel ScalarKernel::jacobi(const Rat& a, const Rat& b) {
    if (a <= -1 || b <= -1) throw arith_error("jacobi kernel requires a, b > -1");
    return ScalarKernel(KernelKind::Jacobi, a, b);
}

DiffOp ScalarKernel::classical_operator() const {
    switch (kind_) {
        case KernelKind::Hermite:
            // dx^2 - dx 2x
            return DiffOp::term(2, RatFun(1)) + DiffOp::term(1, RatFun(lin(CRat(0), CRat(-2))));
        case KernelKind::Laguerre:
            // dx^2 x + dx (b+1-x)
            return DiffOp::term(2, RatFun(Poly::x())) +
                   DiffOp::term(1, RatFun(lin(CRat(b_ + 1), CRat(-1))));
        case KernelKind::Jacobi:
            // dx^2 (1-x^2) + dx (b-a-(b+a+2)x)
            return DiffOp::term(2, poly_rf({CRat(1), CRat(0), CRat(-1)})) +
                   DiffOp::term(1, RatFun(lin(CRat(b_ - a_), CRat(-(a_ + b_ + 2)))));
    }
    throw arith_error("unknown kernel kind");
}

std::optional<Rat> ScalarKernel::left_endpoint() const {
    switch (kind_) {
        case KernelKind::Hermite: return std::nullopt;
        case KernelKind::Laguerre: return Rat(0);
        case KernelKind::Jacobi: return Rat(-1);
    }
    return std::nullopt;
}

std::optional<Rat> ScalarKernel::right_endpoint() const {
    if (kind_ == KernelKind::Jacobi) return Rat(1);
    return std::nullopt;
}

Rat ScalarKernel::interior_point(int k) const {
    // distinct interior rationals for spot checks
    Rat t(2 * k + 1, 2 * k + 3);  // in (0, 1)
    switch (kind_) {
        case KernelKind::Hermite: return Rat(k - 2) + t;
        case KernelKind::Laguerre: return t + frac(k, 2);
        case KernelKind::Jacobi: return (k % 2 == 0) ? Rat(t + t / 2 - 1) : Rat(1 - t / 2);
    }
    return t;
}

bool ScalarKernel::moments_exist_up_to(int m) const {
    (void)m;  // all moments exist under the constructor constraints
    return true;
}

std::string ScalarKernel::describe() const {
    switch (kind_) {
        case KernelKind::Hermite: return "hermite";
        case KernelKind::Laguerre: return "laguerre(b=" + rat_to_string(b_) + ")";
        case KernelKind::Jacobi:
            return "jacobi(a=" + rat_to_string(a_) + ",b=" + rat_to_string(b_) + ")";
    }
    return "?";
}

Weight::Weight(ScalarKernel kernel, RFMat q) : kernel_(std::move(kernel)), q_(std::move(q)) {
    if (!q_.is_square()) throw arith_error("weight factor must be square");
    for (int i = 0; i < q_.rows(); ++i)
        for (int j = 0; j < q_.cols(); ++j)
            if (!q_.at(i, j).is_polynomial())
                throw arith_error("weight factor entries must be polynomial");
    if (!is_hermitian(q_)) throw arith_error("weight factor must be Hermitian");
    if (determinant(q_).is_zero()) throw arith_error("weight factor is singular");
    qinv_ = inverse(q_);
    // exact positive-definiteness spot check at interior points
    for (int k = 0; k < 5; ++k) {
        CRat x(kernel_.interior_point(k));
        CMat v(q_.rows(), q_.cols());
        for (int i = 0; i < q_.rows(); ++i)
            for (int j = 0; j < q_.cols(); ++j) v.at(i, j) = q_.at(i, j).eval(x);
        if (!is_positive_definite(v))
            throw arith_error("weight factor not positive definite at sample point");
    }
}

std::string Weight::describe() const {
    return kernel_.describe() + " kernel, size " + std::to_string(size());
}

DiffOp formal_dagger(const DiffOp& d, const Weight& w) {
    if (!d.is_square() || d.rows() != w.size()) throw arith_error("operator/weight size mismatch");
    DiffOp star = d.formal_star();
    DiffOp conj_q = DiffOp::mult(w.factor()) * star * DiffOp::mult(w.factor_inverse());
    return conj_q.substitute_partial(w.kernel().log_derivative());
}

bool is_w_symmetric(const DiffOp& d, const Weight& w) { return formal_dagger(d, w) == d; }

JacobiIntertwiner jacobi_intertwiner(const Rat& a, const Rat& b) {
    if (a <= -1 || b <= -1) throw arith_error("intertwiner requires a, b > -1");
    JacobiIntertwiner out;
    out.t = DiffOp::term(1, poly_rf({CRat(1), CRat(0), CRat(-1)})) +
            DiffOp::term(0, RatFun(lin(CRat(b - a), CRat(-(b + a + 2)))));
    DiffOp e_ab = ScalarKernel::jacobi(a, b).classical_operator();
    DiffOp e_up = ScalarKernel::jacobi(a + 1, b + 1).classical_operator();
    DiffOp dx = DiffOp::partial(1, 1);

    out.factors_e.name = "e = dx t";
    out.factors_e.status = (e_ab == dx * out.t) ? CertStatus::Pass : CertStatus::Fail;
    if (!out.factors_e.passed()) out.factors_e.detail = "factorization identity fails";

    out.shifts_e.name = "e(a+1,b+1) - (b+a+2) = t dx";
    DiffOp shift = e_up - DiffOp::mult(RatFun(CRat(b + a + 2)));
    out.shifts_e.status = (shift == out.t * dx) ? CertStatus::Pass : CertStatus::Fail;
    if (!out.shifts_e.passed()) out.shifts_e.detail = "shifted factorization identity fails";

    if (!out.factors_e.passed() || !out.shifts_e.passed())
        throw arith_error("jacobi intertwiner identity failure");
    return out;
}

Weight make_hermite_2x2(const Rat& a) {
    // Q = [[1 + a^2 x^2, a x], [a x, 1]]
    CRat a2(a * a);
    RFMat q(2, 2);
    q.at(0, 0) = poly_rf({CRat(1), CRat(0), a2});
    q.at(0, 1) = RatFun(lin(CRat(0), CRat(a)));
    q.at(1, 0) = q.at(0, 1);
    q.at(1, 1) = RatFun(1);
    return Weight(ScalarKernel::hermite(), q);
}

Weight make_laguerre_2x2(const Rat& a, const Rat& b) {
    CRat a2(a * a);
    RFMat q(2, 2);
    q.at(0, 0) = poly_rf({CRat(1), CRat(0), a2});
    q.at(0, 1) = RatFun(lin(CRat(0), CRat(a)));
    q.at(1, 0) = q.at(0, 1);
    q.at(1, 1) = RatFun(1);
    return Weight(ScalarKernel::laguerre(b), q);
}

Weight make_jacobi_2x2(const Rat& a, const Rat& r) {
    if (!(r > 0)) throw arith_error("jacobi-2x2 requires r > 0");
    if (!(a > 0 && a < r)) throw arith_error("jacobi-2x2 requires 0 < a < r");
    Rat alpha = r / 2 - 1;
    // Q = [[a(x^2-1)+r, -r x], [-r x, (r-a)(x^2-1)+r]]
    RFMat q(2, 2);
    q.at(0, 0) = poly_rf({CRat(r - a), CRat(0), CRat(a)});
    q.at(0, 1) = RatFun(lin(CRat(0), CRat(-r)));
    q.at(1, 0) = q.at(0, 1);
    q.at(1, 1) = poly_rf({CRat(r - (r - a)), CRat(0), CRat(r - a)});
    return Weight(ScalarKernel::jacobi(alpha, alpha), q);
}

Weight make_scalar_weight(const ScalarKernel& k) {
    RFMat q(1, 1);
    q.at(0, 0) = RatFun(1);
    return Weight(k, q);
}

Weight make_weight(const std::string& name, const std::map<std::string, Rat>& params) {
    auto need = [&](const std::string& p) -> Rat {
        auto it = params.find(p);
        if (it == params.end()) throw arith_error("weight " + name + " needs parameter " + p);
        return it->second;
    };
    if (name == "hermite-2x2") return make_hermite_2x2(need("a"));
    if (name == "laguerre-2x2") return make_laguerre_2x2(need("a"), need("b"));
    if (name == "jacobi-2x2") return make_jacobi_2x2(need("a"), need("r"));
    if (name == "hermite") return make_scalar_weight(ScalarKernel::hermite());
    if (name == "laguerre") return make_scalar_weight(ScalarKernel::laguerre(need("b")));
    if (name == "jacobi") return make_scalar_weight(ScalarKernel::jacobi(need("a"), need("b")));
    throw arith_error("unknown weight: " + name);
}

}  // namespace mop
