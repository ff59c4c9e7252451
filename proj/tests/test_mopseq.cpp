#include <doctest.h>

#include "mop/mopseq.hpp"
#include "mop/printer.hpp"

using namespace mop;

namespace {

// Gram-Schmidt over exact moments, oracle for the Hankel-solve path
std::vector<PolyMat> gram_schmidt_monic(const MOPSequence& seq, int n_max) {
    std::vector<PolyMat> p;
    int dim = seq.weight().size();
    for (int n = 0; n <= n_max; ++n) {
        PolyMat cur(dim, dim);
        for (int i = 0; i < dim; ++i) cur.at(i, i) = Poly::monomial(n);
        for (int m = 0; m < n; ++m) {
            CMat coef = seq.inner_product(cur, p[static_cast<size_t>(m)]) *
                        inverse(seq.inner_product(p[static_cast<size_t>(m)], p[static_cast<size_t>(m)]));
            cur -= cmat_to_poly(coef) * p[static_cast<size_t>(m)];
        }
        p.push_back(std::move(cur));
    }
    return p;
}

}  // namespace

TEST_CASE("scalar hermite monic polynomials and norms") {
    Weight w = make_scalar_weight(ScalarKernel::hermite());
    MOPSequence seq = MOPSequence::build(w, 7);

    CHECK(seq.P(1).at(0, 0) == Poly::x());
    CHECK(seq.P(2).at(0, 0) == Poly(std::vector<CRat>{CRat(frac(-1, 2)), CRat(0), CRat(1)}));
    CHECK(seq.H(1).at(0, 0) == CRat(frac(1, 2)));
    CHECK(seq.H(2).at(0, 0) == CRat(frac(1, 2)));

    for (int n = 0; n <= 6; ++n) {
        CHECK(seq.B(n).is_zero());
        if (n >= 1) CHECK(seq.C(n).at(0, 0) == CRat(frac(n, 2)));
    }
}

TEST_CASE("P(0) is the identity and H(0) the zeroth moment") {
    for (const Weight& w : {make_hermite_2x2(frac(2, 3)), make_laguerre_2x2(Rat(1), frac(1, 2)),
                            make_jacobi_2x2(frac(1, 2), frac(3, 2))}) {
        MOPSequence seq = MOPSequence::build(w, 2);
        CHECK(poly_mat_degree(seq.P(0)) == 0);
        CHECK(poly_mat_coeff(seq.P(0), 0).is_identity());
        CHECK(seq.H(0) == seq.moment(0));
    }
}

TEST_CASE("first polynomial is orthogonal to constants") {
    Weight w = make_hermite_2x2(Rat(1));
    MOPSequence seq = MOPSequence::build(w, 3);
    PolyMat id = cmat_to_poly(CMat::identity(2));
    CHECK(seq.inner_product(seq.P(1), id).is_zero());
}

TEST_CASE("hankel solve agrees with gram-schmidt") {
    for (const Weight& w :
         {make_hermite_2x2(frac(3, 4)), make_scalar_weight(ScalarKernel::laguerre(frac(1, 2)))}) {
        MOPSequence seq = MOPSequence::build(w, 5);
        auto gs = gram_schmidt_monic(seq, 5);
        for (int n = 0; n <= 5; ++n) CHECK(seq.P(n) == gs[static_cast<size_t>(n)]);
    }
}

TEST_CASE("orthogonality, positivity and recurrence for the built-in weights") {
    Rng rng(2024);
    std::vector<Weight> ws;
    ws.push_back(make_hermite_2x2(rng.nonzero_rational(20)));
    ws.push_back(make_laguerre_2x2(rng.nonzero_rational(20), frac(1, 3)));
    ws.push_back(make_jacobi_2x2(frac(2, 3), frac(7, 4)));
    ws.push_back(make_scalar_weight(ScalarKernel::jacobi(frac(1, 4), frac(5, 2))));

    for (const Weight& w : ws) {
        MOPSequence seq = MOPSequence::build(w, 6);
        for (int n = 0; n <= 6; ++n) {
            for (int m = 0; m < n; ++m) CHECK(seq.inner_product(seq.P(n), seq.P(m)).is_zero());
            CHECK(is_positive_definite(seq.H(n)));
        }
        for (int n = 0; n <= 5; ++n) CHECK(seq.recurrence_residual(n).is_zero());
    }
}

TEST_CASE("complex hermitian factor: orthogonality and conjugation paths") {
    // Q = [[2 + x^2, i x], [-i x, 1]] is Hermitian as a function on the
    // real line and positive definite everywhere (det = 2)
    RFMat q(2, 2);
    q.at(0, 0) = RatFun(Poly(std::vector<CRat>{CRat(2), CRat(0), CRat(1)}));
    q.at(0, 1) = RatFun(Poly(std::vector<CRat>{CRat(0), CRat::i()}));
    q.at(1, 0) = RatFun(Poly(std::vector<CRat>{CRat(0), -CRat::i()}));
    q.at(1, 1) = RatFun(1);
    Weight w(ScalarKernel::hermite(), q);
    MOPSequence seq = MOPSequence::build(w, 6);
    for (int n = 0; n <= 6; ++n) {
        for (int m = 0; m < n; ++m) CHECK(seq.inner_product(seq.P(n), seq.P(m)).is_zero());
        CHECK(is_hermitian(seq.H(n)));
        CHECK(is_positive_definite(seq.H(n)));
    }
    for (int n = 0; n <= 5; ++n) CHECK(seq.recurrence_residual(n).is_zero());

    // dagger stays involutive over genuinely complex coefficients
    Rng rng(99);
    for (int t = 0; t < 5; ++t) {
        DiffOp d(2, 2);
        for (int j = 0; j <= 2; ++j) {
            RFMat a(2, 2);
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c)
                    a.at(r, c) = RatFun(Poly(std::vector<CRat>{
                        CRat(rng.rational(5), rng.rational(5)),
                        CRat(rng.rational(5), rng.rational(5))}));
            d.set_coeff(j, a);
        }
        CHECK(formal_dagger(formal_dagger(d, w), w) == d);
    }
}

TEST_CASE("laguerre B(0) equals b + 1") {
    Rat b(1, 2);
    Weight w = make_scalar_weight(ScalarKernel::laguerre(b));
    MOPSequence seq = MOPSequence::build(w, 3);
    CHECK(seq.B(0).at(0, 0) == CRat(frac(3, 2)));
}
