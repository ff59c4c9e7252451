#include <doctest.h>

#include "mop/parser.hpp"
#include "mop/printer.hpp"
#include "mop/weight.hpp"

using namespace mop;

namespace {

DiffOp op(const std::string& src, std::map<std::string, Rat> params = {}, int size = 2) {
    ParseContext ctx{std::move(params), size};
    return parse_expression(src, ctx);
}

RFMat xpow(int k) {
    RFMat m(1, 1);
    m.at(0, 0) = RatFun(Poly::monomial(k));
    return m;
}

DiffOp rand_op(Rng& rng, int size, int max_order, int max_deg) {
    DiffOp d(size, size);
    for (int j = 0; j <= max_order; ++j) {
        RFMat a(size, size);
        for (int r = 0; r < size; ++r)
            for (int c = 0; c < size; ++c) {
                std::vector<CRat> cs(static_cast<size_t>(rng.range(1, max_deg + 1)));
                for (auto& v : cs) v = CRat(rng.rational(6));
                a.at(r, c) = RatFun(Poly(std::move(cs)));
            }
        d.set_coeff(j, a);
    }
    return d;
}

}  // namespace

TEST_CASE("right-action commutation rule x dx - dx x = 1") {
    DiffOp x_op = op("x", {}, 1);
    DiffOp dx = op("dx", {}, 1);
    CHECK(x_op * dx - dx * x_op == op("1", {}, 1));
    // x dx = dx x + 1 in normal form
    CHECK(x_op * dx == op("dx*x + 1", {}, 1));
}

TEST_CASE("product with the identity") {
    Rng rng(7);
    DiffOp d = rand_op(rng, 2, 3, 3);
    CHECK(DiffOp::identity(2) * d == d);
    CHECK(d * DiffOp::identity(2) == d);
}

TEST_CASE("dx times dx x against the action oracle") {
    DiffOp dx = op("dx", {}, 1);
    DiffOp dxx = op("dx*x", {}, 1);
    DiffOp prod = dx * dxx;
    // oracle: apply both sides to x^k for k <= 6
    for (int k = 0; k <= 6; ++k) {
        RFMat lhs = prod.apply(xpow(k));
        RFMat rhs = dxx.apply(dx.apply(xpow(k)));
        CHECK(lhs == rhs);
    }
    CHECK(prod == op("dx^2*x", {}, 1));
}

TEST_CASE("composition equals iterated action on random operators") {
    Rng rng(19);
    for (int trial = 0; trial < 8; ++trial) {
        DiffOp a = rand_op(rng, 2, 3, 2), b = rand_op(rng, 2, 3, 2);
        RFMat f(2, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                f.at(i, j) = RatFun(Poly::monomial(static_cast<int>(rng.range(0, 3)),
                                                   CRat(rng.rational(5))));
        CHECK((a * b).apply(f) == b.apply(a.apply(f)));
    }
}

TEST_CASE("right action examples") {
    CHECK(op("dx^2", {}, 1).apply(xpow(2)) == xpow(0).scaled(RatFun(CRat(2))));
    Rng rng(31);
    DiffOp idop = DiffOp::identity(2);
    DiffOp d = rand_op(rng, 2, 2, 2);
    RFMat p = d.coeff(0);
    CHECK(idop.apply(p) == p);
    // x^3 . (dx^2 - dx 2x) = 6x - 6x^3
    DiffOp hermite = op("dx^2 - dx*2*x", {}, 1);
    RFMat expect(1, 1);
    expect.at(0, 0) = RatFun(Poly(std::vector<CRat>{CRat(0), CRat(6), CRat(0), CRat(-6)}));
    CHECK(hermite.apply(xpow(3)) == expect);
}

TEST_CASE("formal star on generators") {
    CHECK(op("dx", {}, 1).formal_star() == -op("dx", {}, 1));

    // constant matrix goes to its conjugate transpose
    RFMat c(2, 2);
    c.at(0, 1) = RatFun(CRat(Rat(1), frac(1, 2)));  // 1 + i/2 off-diagonal
    DiffOp m = DiffOp::mult(c);
    DiffOp ms = m.formal_star();
    CHECK(ms.coeff(0).at(1, 0) == RatFun(CRat(Rat(1), frac(-1, 2))));
    CHECK(ms.coeff(0).at(0, 1).is_zero());

    // dx E12 -> -dx E21
    DiffOp e12 = op("dx*[[0,1],[0,0]]");
    DiffOp expect = -op("dx*[[0,0],[1,0]]");
    CHECK(e12.formal_star() == expect);
}

TEST_CASE("formal star is an involutive anti-automorphism") {
    Rng rng(41);
    for (int trial = 0; trial < 8; ++trial) {
        DiffOp a = rand_op(rng, 2, 2, 2), b = rand_op(rng, 2, 2, 2);
        CHECK(a.formal_star().formal_star() == a);
        CHECK((a * b).formal_star() == b.formal_star() * a.formal_star());
    }
}

TEST_CASE("formal dagger fixes the Hermite operator") {
    Weight w = make_scalar_weight(ScalarKernel::hermite());
    DiffOp d = op("dx^2 - dx*2*x", {}, 1);
    // term-by-term conjugation: star is dx^2 + dx 2x + 2, then dx -> dx - 2x
    DiffOp star = d.formal_star();
    CHECK(star == op("2 + dx*2*x + dx^2", {}, 1));
    RatFun s = w.kernel().log_derivative();
    DiffOp shifted = star.substitute_partial(s);
    CHECK(shifted == d);
    CHECK(formal_dagger(d, w) == d);
}

TEST_CASE("dagger of the identity is the identity") {
    Weight w = make_hermite_2x2(frac(2, 3));
    CHECK(formal_dagger(DiffOp::identity(2), w) == DiffOp::identity(2));
}

TEST_CASE("dagger is involutive on random operators") {
    Rng rng(53);
    Weight ws[] = {make_hermite_2x2(Rat(1)), make_laguerre_2x2(frac(1, 2), frac(1, 3)),
                   make_jacobi_2x2(frac(1, 2), Rat(2))};
    for (const auto& w : ws)
        for (int trial = 0; trial < 5; ++trial) {
            DiffOp d = rand_op(rng, 2, 3, 3);
            CHECK(formal_dagger(formal_dagger(d, w), w) == d);
        }
}

TEST_CASE("classical operators are dagger fixed points of their kernels") {
    for (const ScalarKernel& k :
         {ScalarKernel::hermite(), ScalarKernel::laguerre(frac(1, 2)),
          ScalarKernel::jacobi(frac(1, 2), frac(3, 2))}) {
        Weight w = make_scalar_weight(k);
        DiffOp d = k.classical_operator();
        CHECK(formal_dagger(d, w) == d);
    }
}

TEST_CASE("iterated commutators") {
    DiffOp x_op = op("x", {}, 1);
    DiffOp dx = op("dx", {}, 1);
    // Ad_x(dx) = x dx - dx x = 1
    CHECK(commutator(x_op, dx) == op("1", {}, 1));
    Rng rng(61);
    DiffOp l = rand_op(rng, 2, 2, 2);
    CHECK(commutator(l, l).is_zero());
    CHECK(ad_power(x_op, op("dx^2", {}, 1), 3).is_zero());
}

TEST_CASE("Ad_x drops the order once per application") {
    Rng rng(67);
    DiffOp d = rand_op(rng, 2, 3, 3);
    DiffOp x_id = DiffOp::mult(RatFun::x()).promoted(2);
    CHECK(ad_power(x_id, d, d.order() + 1).is_zero());
    CHECK_FALSE(ad_power(x_id, d, d.order()).is_zero());
}

TEST_CASE("degree filtration predicate") {
    auto hermite = is_degree_filtration_preserving(op("dx^2 - dx*2*x", {}, 1));
    CHECK(hermite.preserving);

    auto bad = is_degree_filtration_preserving(op("dx*x^2", {}, 1));
    CHECK_FALSE(bad.preserving);
    CHECK(bad.witness->order == 1);

    std::map<std::string, Rat> pa{{"a", frac(3, 2)}};
    DiffOp d3 = op(
        "dx^2*[[-a^2*x/2,a^3*x^2/2],[-a/2,a^2*x/2]]"
        " + dx*[[-(a^2+1),a*(a^2+2)*x],[0,1]]"
        " + [[0,(a^2+2)/a],[0,0]]",
        pa);
    CHECK(is_degree_filtration_preserving(d3).preserving);
}

TEST_CASE("degree filtration is equivalent to degree control of the action") {
    Rng rng(71);
    auto degree_controlled = [](const DiffOp& d) {
        for (int k = 0; k <= 2 * std::max(d.order(), 0) + 2; ++k) {
            RFMat img = d.apply(xpow(k));
            const RatFun& f = img.at(0, 0);
            if (!f.is_polynomial() || f.num().degree() > k) return false;
        }
        return true;
    };
    for (int trial = 0; trial < 30; ++trial) {
        DiffOp d(1, 1);
        for (int j = 0; j <= 2; ++j)
            d.set_coeff(j, xpow(static_cast<int>(rng.range(0, j + 2))).scaled(
                               RatFun(CRat(rng.nonzero_rational(5)))));
        CHECK(is_degree_filtration_preserving(d).preserving == degree_controlled(d));
    }
}
