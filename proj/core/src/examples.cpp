#include "mop/examples.hpp"

#include "mop/printer.hpp"

namespace mop::examples {

namespace {

Certificate cert(const std::string& name, bool ok, const std::string& fail = "") {
    return Certificate{name, ok ? CertStatus::Pass : CertStatus::Fail, ok ? "" : fail};
}

Poly npoly(std::initializer_list<CRat> ascending) {
    return Poly(std::vector<CRat>(ascending));
}

PolyMat diag2(const Poly& a, const Poly& b) {
    PolyMat m(2, 2);
    m.at(0, 0) = a;
    m.at(1, 1) = b;
    return m;
}

PolyMat entry2(int r, int c, const Poly& p) {
    PolyMat m(2, 2);
    m.at(r, c) = p;
    return m;
}

// is found == phi * reference for a single order-zero left unit phi?
bool proportional_rows(const DiffOp& found, const DiffOp& reference) {
    if (found.is_zero() || reference.is_zero()) return false;
    if (found.order() != reference.order()) return false;
    RFMat lf = found.coeff(found.order());
    RFMat lr = reference.coeff(reference.order());
    RatFun phi;
    for (int e = 0; e < lr.cols(); ++e)
        if (!lr.at(0, e).is_zero()) {
            phi = lf.at(0, e) / lr.at(0, e);
            break;
        }
    if (phi.is_zero()) return false;
    return found == DiffOp::mult(phi) * reference;
}

// shared tail: cyclic generators, U, diagonalization, v_i, adjoint checks
struct CyclicStage {
    std::vector<DiffOp> u_ref;  // the fixed generator data
    std::vector<DiffOp> v;      // solved scalar operators
    UData u_data;
    DiagonalizeResult diag;
    bool ok = true;
};

CyclicStage run_cyclic_stage(Report& rep, const Weight& w, const std::vector<DiffOp>& vs,
                             const std::vector<DiffOp>& u_ref, int order_cap, int degree_cap) {
    CyclicStage st;
    st.u_ref = u_ref;
    int dim = w.size();

    for (int i = 0; i < dim; ++i) {
        bool annihilates = true;
        for (int j = 0; j < dim; ++j)
            if (j != i && !(u_ref[static_cast<size_t>(i)] * vs[static_cast<size_t>(j)]).is_zero())
                annihilates = false;
        rep.add(cert("u" + std::to_string(i + 1) + " annihilates the complementary V",
                     annihilates, "reference row fails the module membership"));
        st.ok = st.ok && annihilates;

        auto solved = cyclic_generator(vs, i, order_cap, degree_cap);
        bool prop = solved.found && proportional_rows(solved.u, u_ref[static_cast<size_t>(i)]);
        rep.add(cert("cyclic generator " + std::to_string(i + 1) +
                         " matches the reference row up to a left unit",
                     prop, solved.found ? "solver found a non-proportional generator"
                                        : solved.detail));
        st.ok = st.ok && prop;
        rep.add_value("u" + std::to_string(i + 1), show(u_ref[static_cast<size_t>(i)]));
    }

    st.u_data = build_u(u_ref);
    rep.add(cert("U(x) invertible", st.u_data.invertible, "det U(x) = 0"));
    rep.add_value("U(x)", show(st.u_data.u_x));
    st.ok = st.ok && st.u_data.invertible;

    st.diag = diagonalize_weight(st.u_data.u_x, w);
    rep.add(cert("U W U* diagonal", st.diag.diagonal, st.diag.detail));
    st.ok = st.ok && st.diag.diagonal;
    if (st.diag.diagonal) {
        RFMat r(dim, dim);
        for (int i = 0; i < dim; ++i) r.at(i, i) = st.diag.rho[static_cast<size_t>(i)];
        rep.add_value("R(x) rational part", show(r));
    }

    for (int i = 0; i < dim; ++i) {
        auto vi = compute_vi(u_ref[static_cast<size_t>(i)], vs[static_cast<size_t>(i)]);
        rep.add(cert("v" + std::to_string(i + 1) + " solves v u = u V", vi.found, vi.detail));
        st.ok = st.ok && vi.found;
        st.v.push_back(vi.found ? vi.v : DiffOp(1, 1));
        if (vi.found) rep.add_value("v" + std::to_string(i + 1), show(vi.v));

        if (vi.found) {
            auto checks = adjoint_symmetry_checks(u_ref[static_cast<size_t>(i)], vi.v, w);
            auto tag = [&](Certificate c) {
                c.name = "i=" + std::to_string(i + 1) + ": " + c.name;
                return c;
            };
            rep.add(tag(checks.symmetry));
            rep.add(tag(checks.ode_residual));
            rep.add(tag(checks.endpoint));
            st.ok = st.ok && checks.symmetry.passed() && checks.ode_residual.passed() &&
                    checks.endpoint.passed();
        }
    }
    return st;
}

void add_membership_cert(Report& rep, const std::string& name, const DiffOp& d,
                         const MOPSequence& seq, int n_win, const PolyMat& expected) {
    DWReport m = dw_membership(d, seq, n_win);
    bool ok = m.accepted && m.lambda == expected;
    rep.add(cert(name + " in D(W) with the expected eigenvalues", ok,
                 m.accepted ? "eigenvalue matrix differs from the expected one" : m.detail));
    if (m.accepted) rep.add_value("lambda(" + name + ")", show_lambda(m.lambda));
}

}  // namespace

Report hermite_family(const Rat& a, int n_win) {
    Report rep("hermite-2x2");
    rep.add_input("weight", "hermite-2x2(a=" + rat_to_string(a) + ")");
    rep.add_input("n_win", std::to_string(n_win));

    Weight w = make_hermite_2x2(a);
    MOPSequence seq = MOPSequence::build(w, n_win + 2);
    ParseContext ctx{{{"a", a}}, 2};
    CRat ca(a);

    DiffOp d1 = parse_expression(
        "dx^2*[[1,0],[0,1]] + dx*[[-2*x,2*a],[0,-2*x]] + [[-2,0],[0,0]]", ctx);
    DiffOp d2 = parse_expression(
        "dx^2*[[-a^2/4,a^3*x/4],[0,0]] + dx*[[0,a/2],[-a/2,a^2*x/2]] + [[0,0],[0,1]]", ctx);
    DiffOp d3 = parse_expression(
        "dx^2*[[-a^2*x/2,a^3*x^2/2],[-a/2,a^2*x/2]] + dx*[[-(a^2+1),a*(a^2+2)*x],[0,1]]"
        " + [[0,(a^2+2)/a],[0,0]]",
        ctx);
    DiffOp d4 = parse_expression(
        "dx^2*[[-a^3*x/4,a^2*(a^2*x^2-1)/4],[-a^2/4,a^3*x/4]]"
        " + dx*[[-a^3/2,a^2*(a^2+2)*x/2],[0,0]] + [[0,(a^2+2)/2],[1,0]]",
        ctx);

    CRat a2 = ca * ca;
    Poly lin1 = npoly({CRat(-2), CRat(-2)});  // -2n - 2
    Poly lin2 = npoly({CRat(0), CRat(-2)});   // -2n
    Poly a2n_2 = npoly({CRat(2), a2});        // a^2 n + 2
    Poly a2n_a2_2 = npoly({CRat(2) + a2, a2});
    PolyMat lam1 = diag2(lin1, lin2);
    PolyMat lam2 = entry2(1, 1, a2n_2.scaled(CRat(frac(1, 2))));
    PolyMat lam3 = entry2(0, 1, (a2n_2 * a2n_a2_2).scaled((CRat(2) * ca).inv()));
    PolyMat lam4 = entry2(0, 1, (a2n_2 * a2n_a2_2).scaled(CRat(frac(1, 4))));
    lam4.at(1, 0) = Poly(1);

    add_membership_cert(rep, "D1", d1, seq, n_win, lam1);
    add_membership_cert(rep, "D2", d2, seq, n_win, lam2);
    add_membership_cert(rep, "D3", d3, seq, n_win, lam3);
    add_membership_cert(rep, "D4", d4, seq, n_win, lam4);

    DiffOp v1 = d2;
    DiffOp v2 = d1.scaled(a2) + d2.scaled(CRat(4)) - DiffOp::identity(2).scaled(CRat(4));
    OrthSystem sys = verify_orthogonal_system({v1, v2}, w, seq, n_win);
    rep.add_all(sys.certificates);
    rep.add_value("lambda(V1+V2)", show_lambda(sys.lambda_sum));

    // centrality fails for this family; record it and check that the
    // operator-level verdict agrees with the eigenvalue-level one
    DiffOp sum = v1 + v2;
    bool op_central = true;
    for (const DiffOp& g : {d1, d2, d3, d4})
        if (!commutator(sum, g).is_zero()) op_central = false;
    bool lam_central = true;
    for (const PolyMat* lg : {&lam1, &lam2, &lam3, &lam4})
        if (sys.lambda_sum * *lg != *lg * sys.lambda_sum) lam_central = false;
    rep.add_value("sum_central", op_central ? "true" : "false");
    rep.add(cert("centrality verdict consistent across both computations",
                 op_central == lam_central, "operator and eigenvalue verdicts disagree"));

    ParseContext rowctx = ctx;
    DiffOp u1 = parse_expression("[[dx*a/2, -dx*a^2*x/2 - 1]]", rowctx);
    DiffOp u2 = parse_expression("[[-1, dx*a/2]]", rowctx);
    CyclicStage st = run_cyclic_stage(rep, w, {v1, v2}, {u1, u2}, 3, 3);

    RFMat u_ref = parse_matrf("[[a/2,-a^2*x/2],[0,a/2]]", ctx);
    rep.add(cert("U(x) matches the reference matrix", st.u_data.u_x == u_ref,
                 "leading coefficient rows differ"));

    // the kernel-free part of U W U* must be (a^2/4) I; the reference data
    // lists kernel exp(x^2) where the computed kernel is exp(-x^2)
    bool rho_ok = st.diag.diagonal;
    for (const RatFun& r : st.diag.rho) rho_ok = rho_ok && r == RatFun(a2 * CRat(frac(1, 4)));
    rep.add(cert("U W U* = (a^2/4) I times the weight kernel", rho_ok,
                 "diagonal entries differ from (a^2/4)"));
    rep.add_value("R_kernel_computed", "exp(-x^2)");
    rep.add_value("R_kernel_reference_discrepancy",
                  "reference data lists exp(x^2); the computed kernel is exp(-x^2)");

    DiffOp hermite_op = ScalarKernel::hermite().classical_operator();
    DiffOp v1_expect = parse_scalar_op("-(a^2/4)*(dx^2 - dx*2*x) + 1", ctx);
    DiffOp v2_expect = parse_scalar_op("a^2*(dx^2 - dx*2*x) - 2*a^2 - 4", ctx);
    rep.add(cert("v1 = -(a^2/4) d + 1 for the classical operator d", st.v[0] == v1_expect,
                 "computed v1 differs"));
    rep.add(cert("v2 = a^2 d - 2 a^2 - 4 for the classical operator d", st.v[1] == v2_expect,
                 "computed v2 differs"));

    rep.add(check_intertwine(st.u_data.u_op, v1, {v1_expect, DiffOp(1, 1)},
                             "U V1 = diag(v1, 0) U"));
    rep.add(check_intertwine(st.u_data.u_op, v2, {DiffOp(1, 1), v2_expect},
                             "U V2 = diag(0, v2) U"));

    for (int i = 0; i < 2; ++i) {
        auto ex = express_in_classical(st.v[static_cast<size_t>(i)], hermite_op);
        rep.add(cert("v" + std::to_string(i + 1) + " is a polynomial in the classical operator",
                     ex.ok, ex.detail));
        if (ex.ok) rep.add_value("p" + std::to_string(i + 1), show(ex.p, "t"));
    }
    return rep;
}

Report laguerre_family(const Rat& a, const Rat& b, int n_win) {
    Report rep("laguerre-2x2");
    rep.add_input("weight",
                  "laguerre-2x2(a=" + rat_to_string(a) + ",b=" + rat_to_string(b) + ")");
    rep.add_input("n_win", std::to_string(n_win));

    Weight w = make_laguerre_2x2(a, b);
    MOPSequence seq = MOPSequence::build(w, n_win + 6);
    ParseContext ctx{{{"a", a}, {"b", b}}, 2};
    CRat ca(a), cb(b);
    CRat a2 = ca * ca, a3 = a2 * ca;

    DiffOp d0 = parse_expression(
        "dx^2*[[x,0],[0,x]] + dx*[[1+b-x,2*a*x],[0,1+b-x]] + [[-1,a*(b+1)],[0,0]]", ctx);
    PolyMat lam0 = diag2(npoly({CRat(-1), CRat(-1)}), npoly({CRat(0), CRat(-1)}));
    // the reference table lists a diagonal eigenvalue matrix for D; the
    // computed image carries a forced off-diagonal entry 2an + a(b+1)
    lam0.at(0, 1) = npoly({ca * (cb + CRat(1)), CRat(2) * ca});
    add_membership_cert(rep, "D", d0, seq, n_win, lam0);
    rep.add_value("lambda(D)_reference_discrepancy",
                  "reference data lists a diagonal matrix; the computed image has the "
                  "off-diagonal entry 2an+a(b+1), and no W-symmetric second-order operator "
                  "with diagonal image exists for this weight");
    rep.add(cert("diagonal part of lambda(D) is diag(-n-1, -n)",
                 lam0.at(0, 0) == npoly({CRat(-1), CRat(-1)}) &&
                     lam0.at(1, 1) == npoly({CRat(0), CRat(-1)}) && lam0.at(1, 0).is_zero(),
                 "diagonal part differs"));

    // order-4 family: reconstructed exactly from membership, W-symmetry and
    // the cleanly printed eigenvalue structure (the remaining eigenvalue
    // corner is solved for), then cross-checked against the reference
    // entries that are printed cleanly
    Poly a22 = npoly({CRat(1), a2 * cb, a2});
    Poly b11 = npoly({a2 * cb + a2 + CRat(1), a2 * cb + CRat(2) * a2, a2});
    // the reference table's corner for D1 prints the constant as a; the
    // reconstruction resolves it to a(b+1), matching the operator's own
    // constant coefficient
    Poly a12_ref = npoly({ca * (cb + CRat(1)), a3 * cb * cb + a3 * cb + CRat(2) * ca,
                          CRat(3) * a3 * cb + a3, CRat(2) * a3});
    Poly b12_ref = npoly({-(a3 * (cb + CRat(1)) * (cb + CRat(1)) + ca * (cb + CRat(1))),
                          -(a3 * (cb + CRat(4)) * (cb + CRat(1)) + CRat(2) * ca),
                          -(CRat(3) * a3 * cb + CRat(5) * a3), CRat(-2) * a3});

    PolyMat lam1_known = entry2(1, 1, a22);
    CompletionResult c1 = complete_dw_operator_masked(seq, lam1_known, {{0, 1}}, 4, 7, true);
    rep.add(cert("order-4 operator D1 reconstructed from symmetry and eigenvalue structure",
                 c1.found && c1.unique,
                 c1.found ? "reconstruction is not unique" : c1.detail));
    PolyMat lam2_known = entry2(0, 0, b11);
    CompletionResult c2 = complete_dw_operator_masked(seq, lam2_known, {{0, 1}}, 4, 7, true);
    rep.add(cert("order-4 operator D2 reconstructed from symmetry and eigenvalue structure",
                 c2.found && c2.unique,
                 c2.found ? "reconstruction is not unique" : c2.detail));
    if (!c1.found || !c2.found) return rep;
    DiffOp d1 = c1.d, d2 = c2.d;
    PolyMat lam1 = c1.lambda, lam2 = c2.lambda;

    rep.add(cert("reconstructed corner of lambda1 is the reference cubic with constant a(b+1)",
                 lam1.at(0, 1) == a12_ref, "corner polynomial differs"));
    rep.add(cert("reconstructed corner of lambda2 equals the reference cubic",
                 lam2.at(0, 1) == b12_ref, "corner polynomial differs"));
    rep.add_value("lambda1_corner_constant", show(lam1.at(0, 1).coeff(0)));
    rep.add_value("lambda2_corner", show(lam2.at(0, 1), "n"));

    add_membership_cert(rep, "D1", d1, seq, n_win, lam1);
    add_membership_cert(rep, "D2", d2, seq, n_win, lam2);

    auto entries_match = [&](const DiffOp& d, int r, int c, const std::string& src) {
        DiffOp got(1, 1);
        for (const auto& [j, m] : d.terms()) {
            RFMat e(1, 1);
            e.at(0, 0) = m.at(r, c);
            if (!e.is_zero()) got.set_coeff(j, e);
        }
        return got == parse_scalar_op(src, ctx);
    };
    bool d1_entries =
        entries_match(d1, 0, 0,
                      "dx^4*a^2*x^2 + dx^3*2*a^2*((b+2)*x-x^2)"
                      " + dx^2*a^2*((b+1)*(b+2)-(3*b+7)*x) - dx*a^2*(b+1)*(b+3)") &&
        entries_match(d1, 1, 0, "-dx^2*a*x - dx*a*(b+1)") &&
        entries_match(d1, 1, 1, "dx^2*a^2*x^2 + dx*a^2*x*(b+1) + 1");
    rep.add(cert("D1 matches the reference entries outside the reconstructed corner",
                 d1_entries, "a cleanly printed entry differs"));
    bool d2_entries =
        entries_match(d2, 0, 0, "dx^2*a^2*x^2 + dx*a^2*x*(b+3) + a^2*(b+1)+1") &&
        entries_match(d2, 1, 0, "dx^2*a*x + dx*a*(b+1)") &&
        entries_match(d2, 1, 1,
                      "dx^4*a^2*x^2 + dx^3*2*a^2*x*(b+2-x)"
                      " + dx^2*a^2*((b+1)*(b+2)-(3*b+5)*x) - dx*a^2*(b+1)^2");
    rep.add(cert("D2 matches the reference entries outside the reconstructed corner",
                 d2_entries, "a cleanly printed entry differs"));

    DiffOp idop = DiffOp::identity(2);
    DiffOp v1 = d1 * (idop.scaled(a2 * cb + a2 + CRat(1)) - d0.scaled(a2 * cb + CRat(2) * a2) +
                      (d0 * d0).scaled(a2));
    DiffOp dpi = d0 + idop;
    DiffOp v2 = d2 * (idop - dpi.scaled(a2 * cb) + (dpi * dpi).scaled(a2));

    OrthSystem sys = verify_orthogonal_system({v1, v2}, w, seq, n_win, {d0, d1, d2});
    rep.add_all(sys.certificates);
    rep.add_value("lambda(V1+V2)", show_lambda(sys.lambda_sum));
    PolyMat expect_sum = diag2(a22 * b11, a22 * b11);
    rep.add(cert("eigenvalue of V1+V2 equals the reference scalar product",
                 sys.lambda_sum == expect_sum, "central element eigenvalue differs"));

    DiffOp u1 = parse_expression(
        "[[dx^2*a*x + dx*a*(b+1), -dx^2*a^2*x^2 - dx*a^2*(b+1)*x - 1]]", ctx);
    DiffOp u2 = parse_expression(
        "[[1, dx^2*a*x + dx*a*(b+1-2*x) - a*(b+1)]]", ctx);
    CyclicStage st = run_cyclic_stage(rep, w, {v1, v2}, {u1, u2}, 3, 3);

    DiffOp lag = ScalarKernel::laguerre(b).classical_operator();
    rep.add(check_intertwine(st.u_data.u_op, d0, {lag, lag - DiffOp::identity(1)},
                             "U D = diag(d, d-1) U"));
    return rep;
}

Report jacobi_family(const Rat& a, const Rat& r, int n_win) {
    Report rep("jacobi-2x2");
    rep.add_input("weight", "jacobi-2x2(a=" + rat_to_string(a) + ",r=" + rat_to_string(r) + ")");
    rep.add_input("n_win", std::to_string(n_win));

    Weight w = make_jacobi_2x2(a, r);
    MOPSequence seq = MOPSequence::build(w, n_win + 2);
    ParseContext ctx{{{"a", a}, {"r", r}}, 2};
    CRat ca(a), cr(r);

    DiffOp d1 = parse_expression(
        "dx^2*[[x^2,x],[-x,-1]] + dx*[[(r+2)*x,r-a+2],[-a,0]] + [[a*(r-a+1),0],[0,0]]", ctx);
    DiffOp d2 = parse_expression(
        "dx^2*[[-1,-x],[x,x^2]] + dx*[[0,a-r],[a+2,(r+2)*x]] + [[0,0],[0,(a+1)*(r-a)]]", ctx);
    DiffOp d3 = parse_expression(
        "dx^2*[[-x,-1],[x^2,x]] + dx*[[-a,0],[2*(a+1)*x,a+2]] + [[0,0],[a*(a+1),0]]", ctx);
    DiffOp d4 = parse_expression(
        "dx^2*[[x,x^2],[-1,-x]] + dx*[[r-a+2,2*(r-a+1)*x],[0,a-r]] + [[0,(r-a)*(r-a+1)],[0,0]]",
        ctx);

    Poly n_a = npoly({ca, CRat(1)});
    Poly n_a1 = npoly({ca + CRat(1), CRat(1)});
    Poly n_ra = npoly({cr - ca, CRat(1)});
    Poly n_ra1 = npoly({cr - ca + CRat(1), CRat(1)});
    PolyMat lam1 = diag2(n_a * n_ra1, Poly());
    PolyMat lam2 = diag2(Poly(), n_a1 * n_ra);
    PolyMat lam3 = entry2(1, 0, n_a * n_a1);
    PolyMat lam4 = entry2(0, 1, n_ra * n_ra1);

    add_membership_cert(rep, "D1", d1, seq, n_win, lam1);
    add_membership_cert(rep, "D2", d2, seq, n_win, lam2);
    add_membership_cert(rep, "D3", d3, seq, n_win, lam3);
    add_membership_cert(rep, "D4", d4, seq, n_win, lam4);

    CRat r2a = cr - CRat(2) * ca;
    DiffOp idop = DiffOp::identity(2);
    DiffOp v1 = (d1 + idop.scaled(r2a)) * d1;
    DiffOp v2 = (d2 - idop.scaled(r2a)) * d2;

    OrthSystem sys = verify_orthogonal_system({v1, v2}, w, seq, n_win, {d1, d2, d3, d4});
    rep.add_all(sys.certificates);
    rep.add_value("lambda(V1+V2)", show_lambda(sys.lambda_sum));
    Poly base = n_a * n_ra1;
    Poly scalar = base * (base + Poly(r2a));
    rep.add(cert("eigenvalue of V1+V2 equals the reference factored polynomial",
                 sys.lambda_sum == diag2(scalar, scalar), "central element eigenvalue differs"));

    DiffOp u1 = parse_expression("[[dx*x + a, dx]]", ctx);
    DiffOp u2 = parse_expression("[[dx, dx*x + r - a]]", ctx);
    CyclicStage st = run_cyclic_stage(rep, w, {v1, v2}, {u1, u2}, 3, 3);

    RFMat u_ref = parse_matrf("[[x,1],[1,x]]", ctx);
    rep.add(cert("U(x) matches the reference matrix", st.u_data.u_x == u_ref,
                 "leading coefficient rows differ"));
    rep.add_value("R_kernel_computed", "(1-x^2)^(r/2-1)");
    rep.add_value("R_classical_weight_note",
                  "R(x) = (1-x^2)^(r/2+1) diag(a, r-a): the (1-x^2)^(r/2) classical weight "
                  "times the rational factor (1-x^2) diag(a, r-a)");
    bool rho_ok = st.diag.diagonal;
    if (rho_ok) {
        RatFun sq = RatFun(Poly(std::vector<CRat>{CRat(1), CRat(0), CRat(-1)})) *
                    RatFun(Poly(std::vector<CRat>{CRat(1), CRat(0), CRat(-1)}));
        rho_ok = st.diag.rho[0] == sq * RatFun(ca) && st.diag.rho[1] == sq * RatFun(cr - ca);
    }
    rep.add(cert("U W U* = (1-x^2)^2 diag(a, r-a) times the weight kernel", rho_ok,
                 "diagonal entries differ"));

    // Gegenbauer operator for the (1-x^2)^(r/2) weight; the diagonal targets
    // carry the eigenvalue constants at n = 0
    DiffOp geg = ScalarKernel::jacobi(r / 2, r / 2).classical_operator();
    CRat c1 = ca * (cr - ca + CRat(1));
    CRat c2 = (ca + CRat(1)) * (cr - ca);
    DiffOp w1 = -geg + DiffOp::mult(RatFun(c1));
    DiffOp w2 = -geg + DiffOp::mult(RatFun(c2));
    rep.add(check_intertwine(st.u_data.u_op, d1, {w1, DiffOp(1, 1)},
                             "U D1 = diag(-d + a(r-a+1), 0) U"));
    rep.add(check_intertwine(st.u_data.u_op, d2, {DiffOp(1, 1), w2},
                             "U D2 = diag(0, -d + (a+1)(r-a)) U"));

    // v_1 = (w_1 + (r-2a)) w_1 and v_2 = (w_2 - (r-2a)) w_2 give the same
    // quadratic (t - c_1)(t - c_2) since c_1 + (r-2a) = c_2
    Poly expect = npoly({-c1, CRat(1)}) * npoly({-c2, CRat(1)});
    for (int i = 0; i < 2; ++i) {
        auto ex = express_in_classical(st.v[static_cast<size_t>(i)], geg);
        rep.add(cert("v" + std::to_string(i + 1) + " is a polynomial in the classical operator",
                     ex.ok, ex.detail));
        if (ex.ok) {
            rep.add_value("p" + std::to_string(i + 1), show(ex.p, "t"));
            rep.add(cert("p" + std::to_string(i + 1) + " equals the expected quadratic",
                         ex.p == expect, "quadratic coefficients differ"));
        }
    }
    return rep;
}

Rat random_hermite_a(Rng& rng) { return rng.nonzero_rational(1000); }

std::pair<Rat, Rat> random_laguerre_ab(Rng& rng) {
    Rat a = rng.nonzero_rational(1000);
    Rat b = rng.rational_in(Rat(-1), Rat(4), 1000);
    return {a, b};
}

std::pair<Rat, Rat> random_jacobi_ar(Rng& rng) {
    Rat r = rng.rational_in(Rat(0), Rat(6), 1000);
    Rat a = rng.rational_in(Rat(0), r, 1000);
    return {a, r};
}

}  // namespace mop::examples
