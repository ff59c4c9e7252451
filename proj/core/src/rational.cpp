#include "mop/rational.hpp"

namespace mop {

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw arith_error("empty rational literal");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw arith_error("bad rational literal: " + s);
    if (q.get_den() == 0) throw arith_error("zero denominator: " + s);
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rat& q) {
    return q.get_str();
}

Rat rat_pow(const Rat& base, long e) {
    if (e < 0) {
        if (base == 0) throw arith_error("0 raised to negative power");
        return 1 / rat_pow(base, -e);
    }
    Rat r(1), b = base;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

Rat rat_gcd(const Rat& a, const Rat& b) {
    if (a == 0) return abs(b);
    if (b == 0) return abs(a);
    mpz_class gn, gl;
    mpz_gcd(gn.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
    mpz_lcm(gl.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
    Rat g(gn, gl);
    g.canonicalize();
    return g;
}

CRat& CRat::operator/=(const CRat& o) {
    if (o.is_zero()) throw arith_error("division by zero");
    return *this *= o.inv();
}

CRat CRat::inv() const {
    if (is_zero()) throw arith_error("inverse of zero");
    Rat n2 = re_ * re_ + im_ * im_;
    return CRat(re_ / n2, -im_ / n2);
}

std::string crat_to_string(const CRat& z) {
    if (z.is_zero()) return "0";
    std::string out;
    if (z.re() != 0) out += rat_to_string(z.re());
    if (z.im() != 0) {
        Rat im = z.im();
        if (!out.empty() && im > 0) out += "+";
        if (im == 1) {
            out += "i";
        } else if (im == -1) {
            out += "-i";
        } else {
            out += rat_to_string(im) + "*i";
        }
    }
    return out;
}

}  // namespace mop
