#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace mop {

// Exact arbitrary-precision rational. mpq_class keeps values canonical:
// gcd(num, den) = 1 and den > 0.
using Rat = mpq_class;

struct arith_error : std::runtime_error {
    explicit arith_error(const std::string& msg) : std::runtime_error(msg) {}
};

Rat rat_from_string(const std::string& s);
std::string rat_to_string(const Rat& q);
Rat rat_pow(const Rat& base, long e);
// gcd on Q: gcd of numerators over lcm of denominators; gcd(0,0) = 0.
Rat rat_gcd(const Rat& a, const Rat& b);

// canonical p/q; the raw two-argument mpq constructor does not reduce
inline Rat frac(long p, long q) {
    Rat r(p, q);
    r.canonicalize();
    return r;
}

// Complex rational a + b*i with both components canonical rationals.
class CRat {
public:
    CRat() : re_(0), im_(0) {}
    CRat(long v) : re_(v), im_(0) {}           // NOLINT: implicit by design
    CRat(const Rat& re) : re_(re), im_(0) {}   // NOLINT
    CRat(Rat re, Rat im) : re_(std::move(re)), im_(std::move(im)) {}

    const Rat& re() const { return re_; }
    const Rat& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }

    CRat operator-() const { return CRat(-re_, -im_); }
    CRat& operator+=(const CRat& o) { re_ += o.re_; im_ += o.im_; return *this; }
    CRat& operator-=(const CRat& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    CRat& operator*=(const CRat& o) {
        Rat r = re_ * o.re_ - im_ * o.im_;
        Rat i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    CRat& operator/=(const CRat& o);

    friend CRat operator+(CRat a, const CRat& b) { return a += b; }
    friend CRat operator-(CRat a, const CRat& b) { return a -= b; }
    friend CRat operator*(CRat a, const CRat& b) { return a *= b; }
    friend CRat operator/(CRat a, const CRat& b) { return a /= b; }
    friend bool operator==(const CRat& a, const CRat& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const CRat& a, const CRat& b) { return !(a == b); }

    CRat conj() const { return CRat(re_, -im_); }
    CRat inv() const;

    static CRat i() { return CRat(Rat(0), Rat(1)); }

private:
    Rat re_, im_;
};

inline CRat conj(const CRat& z) { return z.conj(); }

std::string crat_to_string(const CRat& z);

// Deterministic 64-bit generator (splitmix64) for reproducible sampling.
class Rng {
public:
    explicit Rng(unsigned long long seed) : state_(seed) {}
    unsigned long long next() {
        unsigned long long z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform in [lo, hi]
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<unsigned long long>(hi - lo + 1));
    }
    // random rational with |numerator| <= bound, 1 <= denominator <= bound
    Rat rational(long bound = 1000) {
        Rat q(range(-bound, bound), range(1, bound));
        q.canonicalize();
        return q;
    }
    Rat nonzero_rational(long bound = 1000) {
        for (;;) {
            Rat q = rational(bound);
            if (q != 0) return q;
        }
    }
    // random rational strictly between lo and hi
    Rat rational_in(const Rat& lo, const Rat& hi, long grid = 1000) {
        long k = range(1, grid - 1);
        Rat t(k, grid);
        t.canonicalize();
        return lo + t * (hi - lo);
    }

private:
    unsigned long long state_;
};

}  // namespace mop
