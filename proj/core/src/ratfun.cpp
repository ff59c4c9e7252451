#include "mop/ratfun.hpp"

namespace mop {

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw arith_error("rational function with zero denominator");
    reduce();
}

void RatFun::reduce() {
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = poly_divmod(num_, g).quot;
        den_ = poly_divmod(den_, g).quot;
    }
    CRat lead = den_.leading();
    if (!lead.is_one()) {
        CRat inv = lead.inv();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

const Poly& RatFun::as_poly() const {
    if (!is_polynomial()) throw arith_error("rational function is not a polynomial");
    return num_;
}

CRat RatFun::as_constant() const {
    if (!is_constant()) throw arith_error("rational function is not constant");
    return num_.coeff(0);
}

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    if (a.den_ == b.den_) {
        // common case: both already over the same (often trivial) denominator
        Poly num = a.num_ + b.num_;
        if (a.den_.is_one() || num.is_zero()) return RatFun(std::move(num));
        return RatFun(std::move(num), a.den_);
    }
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) {
    if (a.den_ == b.den_) {
        Poly num = a.num_ - b.num_;
        if (a.den_.is_one() || num.is_zero()) return RatFun(std::move(num));
        return RatFun(std::move(num), a.den_);
    }
    return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator*(const RatFun& a, const RatFun& b) {
    if (a.is_zero() || b.is_zero()) return RatFun();
    if (a.is_polynomial() && b.is_polynomial()) return RatFun(a.num_ * b.num_);
    return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw arith_error("division by zero rational function");
    return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

RatFun RatFun::inv() const {
    if (is_zero()) throw arith_error("inverse of zero rational function");
    return RatFun(den_, num_);
}

RatFun RatFun::derivative() const {
    if (is_polynomial()) return RatFun(num_.derivative());
    return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFun RatFun::conj() const {
    RatFun r;
    r.num_ = num_.conj();
    r.den_ = den_.conj();
    CRat lead = r.den_.leading();
    if (!lead.is_one()) {
        CRat inv = lead.inv();
        r.num_ = r.num_.scaled(inv);
        r.den_ = r.den_.scaled(inv);
    }
    return r;
}

CRat RatFun::eval(const CRat& x) const {
    CRat d = den_.eval(x);
    if (d.is_zero()) throw arith_error("evaluation at a pole");
    return num_.eval(x) / d;
}

}  // namespace mop
