#include "mop/poly.hpp"

namespace mop {

const CRat& Poly::leading() const {
    if (c_.empty()) throw arith_error("leading coefficient of zero polynomial");
    return c_.back();
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    normalize();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<CRat> out(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
}

Poly Poly::scaled(const CRat& s) const {
    if (s.is_zero()) return Poly();
    Poly r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<CRat> out(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) out[k - 1] = c_[k] * CRat(static_cast<long>(k));
    return Poly(std::move(out));
}

Poly Poly::conj() const {
    Poly r = *this;
    for (auto& c : r.c_) c = c.conj();
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) throw arith_error("monic of zero polynomial");
    return scaled(leading().inv());
}

Poly Poly::pow(int e) const {
    if (e < 0) throw arith_error("negative polynomial power");
    Poly r(1), b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        if (e >>= 1) b = b * b;
    }
    return r;
}

CRat Poly::eval(const CRat& x) const {
    CRat acc(0);
    for (size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
}

PolyDiv poly_divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw arith_error("polynomial division by zero");
    PolyDiv out;
    out.rem = a;
    if (a.degree() < b.degree()) return out;
    std::vector<CRat> q(a.degree() - b.degree() + 1);
    CRat inv_lead = b.leading().inv();
    while (!out.rem.is_zero() && out.rem.degree() >= b.degree()) {
        int shift = out.rem.degree() - b.degree();
        CRat f = out.rem.leading() * inv_lead;
        q[shift] = f;
        out.rem -= b * Poly::monomial(shift, f);
    }
    out.quot = Poly(std::move(q));
    return out;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw arith_error("gcd(0, 0) undefined");
    Poly u = a, v = b;
    while (!v.is_zero()) {
        Poly r = poly_divmod(u, v).rem;
        u = v;
        v = std::move(r);
    }
    return u.monic();
}

Poly poly_lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    return poly_divmod(a * b, poly_gcd(a, b)).quot.monic();
}

}  // namespace mop
