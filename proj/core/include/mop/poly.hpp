#pragma once

#include <vector>

#include "mop/rational.hpp"

namespace mop {

// Univariate polynomial over CRat, coefficients ascending by degree,
// no trailing zeros. The zero polynomial has an empty coefficient vector
// and degree() == -1.
class Poly {
public:
    Poly() = default;
    Poly(long v) : Poly(CRat(v)) {}  // NOLINT
    Poly(const CRat& c) {            // NOLINT
        if (!c.is_zero()) c_.push_back(c);
    }
    explicit Poly(std::vector<CRat> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static Poly x() { return Poly(std::vector<CRat>{CRat(0), CRat(1)}); }
    static Poly monomial(int k, const CRat& c = CRat(1)) {
        std::vector<CRat> v(k + 1);
        v[k] = c;
        return Poly(std::move(v));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }

    const CRat& leading() const;
    CRat coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return CRat(0);
        return c_[k];
    }
    const std::vector<CRat>& coeffs() const { return c_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly scaled(const CRat& s) const;
    Poly derivative() const;
    Poly conj() const;  // conjugate coefficients
    Poly monic() const;
    Poly pow(int e) const;
    CRat eval(const CRat& x) const;

private:
    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<CRat> c_;
};

inline Poly conj(const Poly& p) { return p.conj(); }

// Quotient and remainder; divisor must be nonzero.
struct PolyDiv {
    Poly quot, rem;
};
PolyDiv poly_divmod(const Poly& a, const Poly& b);

// Monic gcd; errors when both inputs are zero.
Poly poly_gcd(const Poly& a, const Poly& b);
Poly poly_lcm(const Poly& a, const Poly& b);

}  // namespace mop
