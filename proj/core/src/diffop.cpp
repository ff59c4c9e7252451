#include "mop/diffop.hpp"

namespace mop {

namespace {

// binomial coefficients as CRat
CRat binom(int n, int k) {
    Rat r(1);
    for (int i = 0; i < k; ++i) r *= frac(n - i, i + 1);
    r.canonicalize();
    return CRat(r);
}

RFMat derivative(const RFMat& m, int times = 1) {
    RFMat r = m;
    for (int t = 0; t < times; ++t)
        r = r.map([](const RatFun& f) { return f.derivative(); });
    return r;
}

}  // namespace

void DiffOp::set_coeff(int j, const RFMat& a) {
    if (j < 0) throw arith_error("negative operator order");
    if (a.rows() != rows_ || a.cols() != cols_) throw arith_error("operator coefficient shape mismatch");
    if (a.is_zero())
        terms_.erase(j);
    else
        terms_[j] = a;
}

DiffOp DiffOp::operator-() const {
    DiffOp r(rows_, cols_);
    for (const auto& [j, a] : terms_) r.terms_[j] = -a;
    return r;
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw arith_error("operator shape mismatch");
    for (const auto& [j, a] : o.terms_) {
        auto it = terms_.find(j);
        if (it == terms_.end()) {
            terms_[j] = a;
        } else {
            it->second += a;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) { return *this += -o; }

// (dx^p A)(dx^q B) = sum_i C(q,i) dx^(p+q-i) A^(i) B
DiffOp operator*(const DiffOp& a, const DiffOp& b) {
    if (a.cols_ != b.rows_) throw arith_error("operator size mismatch in product");
    DiffOp r(a.rows_, b.cols_);
    for (const auto& [p, ca] : a.terms_) {
        for (const auto& [q, cb] : b.terms_) {
            RFMat da = ca;
            for (int i = 0; i <= q; ++i) {
                if (!da.is_zero()) {
                    RFMat add = (da * cb).scaled(RatFun(binom(q, i)));
                    r.set_coeff(p + q - i, r.coeff(p + q - i) + add);
                }
                if (i < q) da = derivative(da);
            }
        }
    }
    return r;
}

DiffOp op_mul(const DiffOp& a, const DiffOp& b) { return a * b; }

DiffOp DiffOp::scaled(const CRat& s) const { return scaled(RatFun(s)); }

DiffOp DiffOp::scaled(const RatFun& s) const {
    DiffOp r(rows_, cols_);
    if (s.is_zero()) return r;
    for (const auto& [j, a] : terms_) r.terms_[j] = a.map([&](const RatFun& f) { return s * f; });
    return r;
}

RFMat DiffOp::apply(const RFMat& f) const {
    if (f.cols() != rows_) throw arith_error("operator size mismatch in action");
    RFMat out(f.rows(), cols_);
    RFMat df = f;
    int last = 0;
    for (const auto& [j, a] : terms_) {
        df = derivative(df, j - last);
        last = j;
        out += df * a;
    }
    return out;
}

PolyMat DiffOp::apply_poly(const PolyMat& f) const {
    return rf_to_poly(apply(poly_to_rf(f)));
}

DiffOp DiffOp::formal_star() const {
    DiffOp r(cols_, rows_);
    for (const auto& [j, a] : terms_) {
        RFMat h = a.conj_transpose();
        CRat sign((j % 2 == 0) ? 1 : -1);
        for (int i = 0; i <= j; ++i) {
            RFMat add = h.scaled(RatFun(sign * binom(j, i)));
            r.set_coeff(j - i, r.coeff(j - i) + add);
            if (i < j) h = derivative(h);
        }
    }
    return r;
}

DiffOp DiffOp::substitute_partial(const RatFun& s) const {
    DiffOp shifted = DiffOp::partial(rows_) + DiffOp::mult(s).promoted(rows_);
    DiffOp result(rows_, cols_);
    int top = order();
    // powers (dx+s)^j accumulated incrementally
    DiffOp pw = DiffOp::identity(rows_);
    for (int j = 0; j <= top; ++j) {
        auto it = terms_.find(j);
        if (it != terms_.end()) result += pw * DiffOp::from_coeff(0, it->second);
        if (j < top) pw = shifted * pw;
    }
    return result;
}

DiffOp DiffOp::promoted(int n) const {
    if (!is_scalar()) throw arith_error("promote requires a scalar operator");
    DiffOp r(n, n);
    for (const auto& [j, a] : terms_) {
        const RatFun& f = a.at(0, 0);
        RFMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = f;
        r.terms_[j] = std::move(m);
    }
    return r;
}

bool DiffOp::has_polynomial_coeffs() const {
    for (const auto& [j, a] : terms_)
        for (int i = 0; i < rows_; ++i)
            for (int c = 0; c < cols_; ++c)
                if (!a.at(i, c).is_polynomial()) return false;
    return true;
}

int DiffOp::max_coeff_degree() const {
    int d = -1;
    for (const auto& [j, a] : terms_)
        for (int i = 0; i < rows_; ++i)
            for (int c = 0; c < cols_; ++c) {
                const RatFun& f = a.at(i, c);
                if (!f.is_polynomial()) throw arith_error("operator has non-polynomial coefficients");
                d = std::max(d, f.num().degree());
            }
    return d;
}

DiffOp commutator(const DiffOp& a, const DiffOp& b) { return a * b - b * a; }

DiffOp ad_power(const DiffOp& a, const DiffOp& b, int k) {
    if (k < 1) throw arith_error("ad power requires k >= 1");
    DiffOp r = b;
    for (int i = 0; i < k; ++i) r = commutator(a, r);
    return r;
}

DegreeFiltrationResult is_degree_filtration_preserving(const DiffOp& d) {
    for (const auto& [j, a] : d.terms()) {
        for (int i = 0; i < d.rows(); ++i)
            for (int c = 0; c < d.cols(); ++c) {
                const RatFun& f = a.at(i, c);
                if (!f.is_polynomial() || f.num().degree() > j)
                    return {false, DegreeFiltrationWitness{j, i, c}};
            }
    }
    return {true, std::nullopt};
}

}  // namespace mop
