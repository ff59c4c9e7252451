#include <doctest.h>

#include "mop/parser.hpp"
#include "mop/printer.hpp"
#include "mop/report.hpp"

using namespace mop;

TEST_CASE("parser builds the hermite-type operator") {
    Rat a = frac(3, 2);
    ParseContext ctx{{{"a", a}}, 2};
    DiffOp d = parse_expression(
        "dx^2*[[1,0],[0,1]] + dx*[[-2*x,2*a],[0,-2*x]] + [[-2,0],[0,0]]", ctx);
    CHECK(d.order() == 2);
    CHECK(d.coeff(2).is_identity());
    CHECK(d.coeff(1).at(0, 1) == RatFun(CRat(2 * a)));
    CHECK(d.coeff(1).at(0, 0) == RatFun(Poly(std::vector<CRat>{CRat(0), CRat(-2)})));
    CHECK(d.coeff(0).at(0, 0) == RatFun(CRat(-2)));
}

TEST_CASE("parser handles identity matrices, powers and division") {
    ParseContext ctx{{}, 2};
    RFMat id = parse_matrf("[[1,0],[0,1]]", ctx);
    CHECK(id.is_identity());
    DiffOp p = parse_expression("(x+1)^3", ctx);
    CHECK(p.coeff(0).at(0, 0).num().degree() == 3);
    DiffOp q = parse_expression("4*x/(1+2*x^2)", ctx);
    CHECK(q.coeff(0).at(0, 0) ==
          RatFun(Poly(std::vector<CRat>{CRat(0), CRat(2)}),
                 Poly(std::vector<CRat>{CRat(frac(1, 2)), CRat(0), CRat(1)})));
}

TEST_CASE("parse errors carry positions") {
    ParseContext ctx{{}, 2};
    try {
        parse_expression("dx*(", ctx);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.offset == 4);
        CHECK(e.line == 1);
        CHECK(e.col == 5);
    }
    CHECK_THROWS_AS(parse_expression("dx*unknown_param", ctx), ParseError);
    CHECK_THROWS_AS(parse_expression("[[1,2],[3]]", ctx), ParseError);
    CHECK_THROWS_AS(parse_expression("x^-2", ctx), ParseError);
    CHECK_THROWS_AS(parse_expression("x/(x-x)", ctx), ParseError);
    CHECK_THROWS_AS(parse_expression("x/dx", ctx), ParseError);
}

TEST_CASE("print then parse is the identity on the built-in operators") {
    Rat a = frac(2, 3), b = frac(1, 2), r = frac(5, 2);
    ParseContext ctx{{{"a", a}, {"b", b}, {"r", r}}, 2};
    const char* sources[] = {
        "dx^2*[[1,0],[0,1]] + dx*[[-2*x,2*a],[0,-2*x]] + [[-2,0],[0,0]]",
        "dx^2*[[-a^2/4,a^3*x/4],[0,0]] + dx*[[0,a/2],[-a/2,a^2*x/2]] + [[0,0],[0,1]]",
        "dx^2*[[x,0],[0,x]] + dx*[[1+b-x,2*a*x],[0,1+b-x]] + [[-1,a*(b+1)],[0,0]]",
        "dx^2*[[-1,-x],[x,x^2]] + dx*[[0,a-r],[a+2,(r+2)*x]] + [[0,0],[0,(a+1)*(r-a)]]",
        "dx^4*[[x,0],[0,1]] + dx*[[0,1/3],[x^2,0]] + [[-2,0],[0,7]]",
    };
    for (const char* src : sources) {
        DiffOp d = parse_expression(src, ctx);
        std::string printed = show(d);
        DiffOp again = parse_expression(printed, ctx);
        CHECK(again == d);
        CHECK(show(again) == printed);
    }
    // scalar operators round trip as well
    DiffOp s = parse_expression("dx^2*x + dx*(b+1-x)", ParseContext{{{"b", b}}, 1});
    CHECK(parse_expression(show(s), ParseContext{{{"b", b}}, 1}) == s);
}

TEST_CASE("canonical printing of eigenvalue matrices") {
    PolyMat lam(2, 2);
    lam.at(0, 0) = Poly(std::vector<CRat>{CRat(-2), CRat(-2)});
    lam.at(1, 1) = Poly(std::vector<CRat>{CRat(0), CRat(-2)});
    CHECK(show_lambda(lam) == "[[-2*n-2,0],[0,-2*n]]");
    CHECK(show(CRat(frac(-3, 4))) == "-3/4");
    CHECK(show(RatFun(Poly(std::vector<CRat>{CRat(1), CRat(1)}),
                      Poly(std::vector<CRat>{CRat(-1), CRat(1)}))) == "(x+1)/(x-1)");
}

TEST_CASE("weight specs parse against the registry") {
    Weight w = parse_weight_spec("hermite-2x2(a=2/3)");
    CHECK(w.size() == 2);
    CHECK(w.kernel().kind() == KernelKind::Hermite);
    Weight ws = parse_weight_spec("laguerre(b=1/2)");
    CHECK(ws.size() == 1);
    CHECK_THROWS_AS(parse_weight_spec("unknown-weight(a=1)"), arith_error);
    CHECK_THROWS_AS(parse_weight_spec("laguerre-2x2(a=1)"), arith_error);  // missing b
}

TEST_CASE("reports serialize deterministically") {
    auto build = [] {
        Report rep("demo");
        rep.add_input("weight", "hermite-2x2(a=1)");
        rep.add(Certificate{"first", CertStatus::Pass, ""});
        rep.add(Certificate{"second", CertStatus::Fail, "residual nonzero"});
        rep.add_value("lambda", "[[-2*n-2,0],[0,-2*n]]");
        return rep;
    };
    std::string one = build().to_json();
    std::string two = build().to_json();
    CHECK(one == two);
    CHECK(one.find("\"certificates\"") != std::string::npos);
    CHECK(build().exit_code() == 1);

    Report empty("empty");
    CHECK(empty.to_json().find("\"certificates\": []") != std::string::npos);
    CHECK(empty.exit_code() == 0);

    Report inconclusive("inc");
    inconclusive.add(Certificate{"window", CertStatus::Inconclusive, "window exhausted"});
    CHECK(inconclusive.exit_code() == 3);
}
