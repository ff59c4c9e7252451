#include <doctest.h>

#include <cmath>
#include <functional>

#include "mop/moments.hpp"
#include "mop/parser.hpp"
#include "mop/printer.hpp"

using namespace mop;

namespace {

// adaptive Simpson quadrature, oracle-only
double simpson(const std::function<double(double)>& f, double a, double b, double fa, double fm,
               double fb, double whole, double eps, int depth) {
    double m = (a + b) / 2;
    double lm = (a + m) / 2, rm = (m + b) / 2;
    double flm = f(lm), frm = f(rm);
    double left = (m - a) / 6 * (fa + 4 * flm + fm);
    double right = (b - m) / 6 * (fm + 4 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) < 15 * eps)
        return left + right + (left + right - whole) / 15;
    return simpson(f, a, m, fa, flm, fm, left, eps, depth - 1) +
           simpson(f, m, b, fm, frm, fb, right, eps, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b) {
    // coarse composite pass fixes the magnitude for the tolerance
    double scale = 0;
    int panels = 256;
    double h = (b - a) / panels;
    for (int i = 0; i < panels; ++i)
        scale += std::abs(f(a + (i + 0.5) * h)) * h;
    double eps = 1e-13 * std::max(1.0, scale);
    // refine adaptively inside fixed panels so narrow peaks cannot hide
    // between coarse sample points
    int k = 32;
    double hk = (b - a) / k;
    double total = 0;
    for (int i = 0; i < k; ++i) {
        double lo = a + i * hk, hi = lo + hk;
        double fa = f(lo), fb = f(hi), fm = f((lo + hi) / 2);
        double whole = hk / 6 * (fa + 4 * fm + fb);
        total += simpson(f, lo, hi, fa, fm, fb, whole, eps / k, 24);
    }
    return total;
}

double rat_d(const Rat& q) { return q.get_d(); }

// numeric normalized moments for each kernel on a transformed smooth domain
double numeric_moment(const ScalarKernel& k, int m) {
    switch (k.kind()) {
        case KernelKind::Hermite: {
            auto f = [&](double x) { return std::pow(x, m) * std::exp(-x * x); };
            return integrate(f, -12.0, 12.0);
        }
        case KernelKind::Laguerre: {
            double b = rat_d(k.param_b());
            // x = t^2 removes the endpoint singularity for -1 < b < 0
            auto f = [&](double t) {
                return 2.0 * std::pow(t, 2.0 * (b + m) + 1.0) * std::exp(-t * t);
            };
            return integrate(f, 0.0, 14.0);
        }
        case KernelKind::Jacobi: {
            double a = rat_d(k.param_a()), b = rat_d(k.param_b());
            // x = sin(theta); needs a, b >= 0 to stay smooth, which the
            // oracle's parameter choices respect
            auto f = [&](double th) {
                double x = std::sin(th), c = std::cos(th);
                return std::pow(x, m) * std::pow(1 - x, a) * std::pow(1 + x, b) * c;
            };
            return integrate(f, -std::asin(1.0), std::asin(1.0));
        }
    }
    return 0;
}

}  // namespace

TEST_CASE("classical kernels and operators") {
    ScalarKernel h = ScalarKernel::hermite();
    ParseContext scalar{{}, 1};
    CHECK(h.log_derivative() == parse_matrf("-2*x", scalar).at(0, 0));
    CHECK(h.classical_operator() == parse_expression("dx^2 - dx*2*x", scalar));

    ScalarKernel lag = ScalarKernel::laguerre(frac(1, 2));
    ParseContext pb{{{"b", frac(1, 2)}}, 1};
    CHECK(lag.classical_operator() == parse_expression("dx^2*x + dx*(b+1-x)", pb));
    CHECK(lag.log_derivative() == RatFun(Poly(std::vector<CRat>{CRat(frac(1, 2)), CRat(-1)}),
                                         Poly::x()));

    ParseContext pab{{{"a", frac(1, 3)}, {"b", frac(3, 4)}}, 1};
    ScalarKernel jac = ScalarKernel::jacobi(frac(1, 3), frac(3, 4));
    CHECK(jac.classical_operator() ==
          parse_expression("dx^2*(1-x^2) + dx*(b-a-(b+a+2)*x)", pab));

    CHECK_THROWS_AS(ScalarKernel::laguerre(frac(-3, 2)), arith_error);
    CHECK_THROWS_AS(ScalarKernel::jacobi(Rat(-1), Rat(0)), arith_error);
}

TEST_CASE("pearson moments, frozen values") {
    auto h = pearson_moments(ScalarKernel::hermite(), 10);
    CHECK(h[2] == frac(1, 2));
    CHECK(h[4] == frac(3, 4));
    for (int m = 1; m <= 9; m += 2) CHECK(h[m] == 0);

    auto l = pearson_moments(ScalarKernel::laguerre(frac(1, 2)), 4);
    CHECK(l[1] == frac(3, 2));

    // Gegenbauer kernel (1-x^2)^s has mu_2/mu_0 = 1/(2s+3)
    for (Rat s : {frac(1, 2), Rat(2), frac(5, 3)}) {
        auto g = pearson_moments(ScalarKernel::jacobi(s, s), 2);
        CHECK(g[2] == 1 / (2 * s + 3));
        CHECK(g[1] == 0);
    }
}

TEST_CASE("pearson moments agree with numeric quadrature") {
    for (const ScalarKernel& k :
         {ScalarKernel::hermite(), ScalarKernel::laguerre(frac(1, 2)),
          ScalarKernel::laguerre(Rat(3)), ScalarKernel::jacobi(frac(1, 2), frac(3, 2)),
          ScalarKernel::jacobi(Rat(2), Rat(2))}) {
        auto mu = pearson_moments(k, 10);
        double mu0 = numeric_moment(k, 0);
        for (int m = 1; m <= 10; ++m) {
            double expected = numeric_moment(k, m) / mu0;
            double got = rat_d(mu[m]);
            double scale = std::max({1.0, std::abs(expected), std::abs(got)});
            CHECK(std::abs(got - expected) / scale < 1e-10);
        }
    }
}

TEST_CASE("matrix moments of the 2x2 hermite weight") {
    Weight w = make_hermite_2x2(Rat(1));
    auto mm = matrix_moments(w, 3);
    CMat m0(2, 2);
    m0.at(0, 0) = CRat(frac(3, 2));
    m0.at(1, 1) = CRat(1);
    CHECK(mm[0] == m0);

    // odd moments pick up only the odd part of Q against even scalar moments
    CMat m1(2, 2);
    m1.at(0, 1) = CRat(frac(1, 2));
    m1.at(1, 0) = CRat(frac(1, 2));
    CHECK(mm[1] == m1);

    // scalar reduction
    Weight ws = make_scalar_weight(ScalarKernel::hermite());
    auto sm = matrix_moments(ws, 4);
    CHECK(sm[2].at(0, 0) == CRat(frac(1, 2)));
    CHECK(sm[4].at(0, 0) == CRat(frac(3, 4)));
}

TEST_CASE("weight validation rejects bad factors") {
    RFMat not_hermitian(2, 2);
    not_hermitian.at(0, 0) = RatFun(1);
    not_hermitian.at(0, 1) = RatFun::x();
    not_hermitian.at(1, 1) = RatFun(1);
    CHECK_THROWS_AS(Weight(ScalarKernel::hermite(), not_hermitian), arith_error);

    RFMat singular(2, 2);
    singular.at(0, 0) = RatFun(1);
    CHECK_THROWS_AS(Weight(ScalarKernel::hermite(), singular), arith_error);

    CHECK_THROWS_AS(make_jacobi_2x2(Rat(3), Rat(2)), arith_error);
}
