#pragma once

#include "mop/poly.hpp"

namespace mop {

// Reduced rational function num/den with gcd(num, den) = 1 and den monic.
class RatFun {
public:
    RatFun() : num_(), den_(1) {}
    RatFun(long v) : num_(v), den_(1) {}        // NOLINT
    RatFun(const CRat& c) : num_(c), den_(1) {} // NOLINT
    RatFun(const Poly& p) : num_(p), den_(1) {} // NOLINT
    RatFun(Poly num, Poly den);

    static RatFun x() { return RatFun(Poly::x()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }

    // num/den as a polynomial; requires den == 1
    const Poly& as_poly() const;
    CRat as_constant() const;

    RatFun operator-() const;
    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }
    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    RatFun inv() const;
    RatFun derivative() const;
    RatFun conj() const;
    CRat eval(const CRat& x) const;  // errors on a pole
    bool has_pole_at(const CRat& x) const { return den_.eval(x).is_zero(); }

private:
    void reduce();
    Poly num_, den_;
};

inline RatFun conj(const RatFun& f) { return f.conj(); }

}  // namespace mop
