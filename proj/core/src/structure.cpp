#include "mop/structure.hpp"

namespace mop {

namespace {

Certificate make_cert(const std::string& name, bool ok, const std::string& fail_detail = "",
                      const std::string& pass_detail = "") {
    Certificate c;
    c.name = name;
    c.status = ok ? CertStatus::Pass : CertStatus::Fail;
    c.detail = ok ? pass_detail : fail_detail;
    return c;
}

Poly monic_den_lcm(const DiffOp& d) {
    Poly g(1);
    for (const auto& [j, a] : d.terms())
        for (int r = 0; r < d.rows(); ++r)
            for (int c = 0; c < d.cols(); ++c) g = poly_lcm(g, a.at(r, c).den());
    return g;
}

}  // namespace

OrthSystem verify_orthogonal_system(const std::vector<DiffOp>& vs, const Weight& w,
                                    const MOPSequence& seq, int n_win,
                                    const std::vector<DiffOp>& centrality_generators) {
    if (vs.empty()) throw arith_error("empty orthogonal system");
    OrthSystem sys;
    sys.v = vs;
    int count = static_cast<int>(vs.size());

    bool core = true;
    for (int i = 0; i < count; ++i) {
        DWReport m = dw_membership(vs[i], seq, n_win);
        sys.certificates.push_back(make_cert("V" + std::to_string(i + 1) + " in D(W)", m.accepted,
                                             m.detail));
        core = core && m.accepted;
        sys.lambda.push_back(m.accepted ? m.lambda : PolyMat(w.size(), w.size()));
        sys.orders.push_back(vs[i].order());

        bool sym = is_w_symmetric(vs[i], w);
        sys.certificates.push_back(make_cert("V" + std::to_string(i + 1) + " W-symmetric", sym,
                                             "dagger differs from the operator"));
        core = core && sym;
    }

    for (int i = 0; i < count; ++i)
        for (int j = i + 1; j < count; ++j) {
            bool z = (vs[i] * vs[j]).is_zero() && (vs[j] * vs[i]).is_zero();
            sys.certificates.push_back(
                make_cert("V" + std::to_string(i + 1) + " V" + std::to_string(j + 1) +
                              " = 0 both orders",
                          z, "a product is nonzero"));
            core = core && z;
        }

    sys.lambda_sum = PolyMat(w.size(), w.size());
    for (const auto& l : sys.lambda) sys.lambda_sum += l;
    bool nzd = !determinant(poly_to_rf(sys.lambda_sum)).is_zero();
    sys.certificates.push_back(make_cert("sum of V_i is a non-zero divisor", nzd,
                                         "det of the Fourier image vanishes identically"));
    core = core && nzd;
    sys.core_ok = core;

    if (!centrality_generators.empty()) {
        DiffOp sum = vs[0];
        for (int i = 1; i < count; ++i) sum += vs[i];
        bool central = true;
        std::string which;
        for (size_t g = 0; g < centrality_generators.size(); ++g)
            if (!commutator(sum, centrality_generators[g]).is_zero()) {
                central = false;
                which = "fails to commute with generator " + std::to_string(g + 1);
                break;
            }
        sys.certificates.push_back(make_cert("sum of V_i central", central, which));

        bool scalar = true;
        const Poly& diag0 = sys.lambda_sum.at(0, 0);
        for (int r = 0; r < w.size() && scalar; ++r)
            for (int c = 0; c < w.size(); ++c) {
                const Poly& e = sys.lambda_sum.at(r, c);
                if ((r == c && e != diag0) || (r != c && !e.is_zero())) {
                    scalar = false;
                    break;
                }
            }
        sys.certificates.push_back(make_cert("Fourier image of the sum is scalar", scalar,
                                             "image is not a scalar polynomial times I"));
    }

    // non-nilpotent pairwise-annihilating elements bound the module rank
    int non_nilpotent = 0;
    for (int i = 0; i < count; ++i) {
        PolyMat p = sys.lambda[i];
        for (int k = 1; k < w.size(); ++k) p = p * sys.lambda[i];
        if (!p.is_zero()) ++non_nilpotent;
    }
    sys.rank_lower_bound = non_nilpotent;
    sys.certificates.push_back(make_cert("rank lower bound <= N", non_nilpotent <= w.size(),
                                         "more than N pairwise-annihilating non-nilpotents"));
    return sys;
}

CyclicGeneratorResult cyclic_generator(const std::vector<DiffOp>& vs, int i, int order_cap,
                                       int degree_cap) {
    CyclicGeneratorResult out;
    if (vs.empty()) throw arith_error("empty system");
    int dim = vs[0].rows();
    if (i < 0 || i >= static_cast<int>(vs.size())) throw arith_error("bad system index");

    std::vector<const DiffOp*> annihilated;
    std::vector<Poly> dens;
    for (int j = 0; j < static_cast<int>(vs.size()); ++j)
        if (j != i) {
            annihilated.push_back(&vs[j]);
            dens.push_back(monic_den_lcm(vs[j]));
        }

    for (int k = 0; k <= order_cap; ++k) {
        for (int dcap = 0; dcap <= degree_cap; ++dcap) {
            int unknowns = (k + 1) * dim * (dcap + 1);
            // products of each ansatz basis element with each annihilated V_j
            std::vector<std::vector<DiffOp>> products(annihilated.size());
            int max_order = 0, max_deg = 0;
            for (size_t jj = 0; jj < annihilated.size(); ++jj) {
                products[jj].reserve(unknowns);
                for (int p = 0; p <= k; ++p)
                    for (int e = 0; e < dim; ++e)
                        for (int t = 0; t <= dcap; ++t) {
                            RFMat row(1, dim);
                            row.at(0, e) = RatFun(Poly::monomial(t));
                            DiffOp basis = DiffOp::from_coeff(p, row);
                            // scaling by the denominator lcm clears every
                            // denominator of the product exactly
                            DiffOp prod = (basis * *annihilated[jj]).scaled(RatFun(dens[jj]));
                            max_order = std::max(max_order, prod.order());
                            products[jj].push_back(std::move(prod));
                        }
                for (const auto& prod : products[jj])
                    for (const auto& [q, a] : prod.terms())
                        for (int c = 0; c < dim; ++c)
                            max_deg = std::max(max_deg, a.at(0, c).num().degree());
            }
            int rows_per = (max_order + 1) * dim * (max_deg + 1);
            CMat a(static_cast<int>(annihilated.size()) * rows_per, unknowns);
            for (size_t jj = 0; jj < annihilated.size(); ++jj) {
                for (int u = 0; u < unknowns; ++u) {
                    const DiffOp& prod = products[jj][static_cast<size_t>(u)];
                    for (const auto& [q, am] : prod.terms())
                        for (int c = 0; c < dim; ++c) {
                            const Poly& entry = am.at(0, c).num();
                            if (!am.at(0, c).is_polynomial())
                                throw arith_error("denominator clearing failed");
                            for (int s = 0; s <= entry.degree(); ++s) {
                                int row = static_cast<int>(jj) * rows_per +
                                          (q * dim + c) * (max_deg + 1) + s;
                                a.at(row, u) = entry.coeff(s);
                            }
                        }
                }
            }
            auto basis_vs = nullspace(a);
            if (basis_vs.empty()) continue;

            const CMat& z = basis_vs.front();
            DiffOp u_found(1, dim);
            for (int p = 0; p <= k; ++p) {
                RFMat coeff(1, dim);
                bool any = false;
                for (int e = 0; e < dim; ++e) {
                    std::vector<CRat> cs(dcap + 1);
                    for (int t = 0; t <= dcap; ++t)
                        cs[t] = z.at(p * dim * (dcap + 1) + e * (dcap + 1) + t, 0);
                    Poly pe(std::move(cs));
                    if (!pe.is_zero()) any = true;
                    coeff.at(0, e) = RatFun(pe);
                }
                if (any) u_found.set_coeff(p, coeff);
            }
            if (u_found.is_zero()) continue;

            int ord = u_found.order();
            RFMat lead = u_found.coeff(ord);
            CRat scale(1);
            for (int e = 0; e < dim; ++e)
                if (!lead.at(0, e).is_zero()) {
                    scale = lead.at(0, e).num().leading();
                    break;
                }
            out.found = true;
            out.u = u_found.scaled(CRat(1) / scale);
            out.order = ord;
            out.detail = "order " + std::to_string(ord) + ", coefficient degree cap " +
                         std::to_string(dcap);
            return out;
        }
    }
    out.detail = "no generator up to order cap " + std::to_string(order_cap) +
                 " (inconclusive)";
    return out;
}

UData build_u(const std::vector<DiffOp>& us) {
    if (us.empty()) throw arith_error("no generators");
    int dim = us[0].cols();
    if (static_cast<int>(us.size()) != dim) throw arith_error("need one generator per row");
    UData out;
    out.u_op = DiffOp(dim, dim);
    out.u_x = RFMat(dim, dim);
    for (int i = 0; i < dim; ++i) {
        const DiffOp& u = us[static_cast<size_t>(i)];
        if (u.rows() != 1 || u.cols() != dim) throw arith_error("generator must be a 1 x N row");
        for (const auto& [j, a] : u.terms()) {
            RFMat c = out.u_op.coeff(j);
            for (int e = 0; e < dim; ++e) c.at(i, e) = a.at(0, e);
            out.u_op.set_coeff(j, c);
        }
        out.orders.push_back(u.order());
        RFMat lead = u.coeff(u.order());
        for (int e = 0; e < dim; ++e) out.u_x.at(i, e) = lead.at(0, e);
    }
    out.invertible = !determinant(out.u_x).is_zero();
    return out;
}

DiagonalizeResult diagonalize_weight(const RFMat& u_x, const Weight& w) {
    DiagonalizeResult out;
    if (determinant(u_x).is_zero()) throw arith_error("U(x) is singular");
    out.product = u_x * w.factor() * u_x.conj_transpose();
    out.diagonal = true;
    int dim = u_x.rows();
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c)
            if (r != c && !out.product.at(r, c).is_zero()) {
                out.diagonal = false;
                out.detail = "nonzero off-diagonal entry (" + std::to_string(r) + "," +
                             std::to_string(c) + ")";
            }
    if (out.diagonal)
        for (int r = 0; r < dim; ++r) out.rho.push_back(out.product.at(r, r));
    return out;
}

ComputeViResult compute_vi(const DiffOp& u, const DiffOp& big_v) {
    ComputeViResult out;
    if (u.rows() != 1) throw arith_error("generator must be a row operator");
    DiffOp rhs = u * big_v;
    if (rhs.is_zero()) {
        out.found = true;
        out.v = DiffOp(1, 1);
        return out;
    }
    int ell = u.order();
    int m = rhs.order() - ell;
    if (m < 0) {
        out.detail = "right-hand side has too low an order";
        return out;
    }
    RFMat lead = u.coeff(ell);
    int pivot = -1;
    for (int e = 0; e < u.cols(); ++e)
        if (!lead.at(0, e).is_zero()) {
            pivot = e;
            break;
        }
    if (pivot < 0) throw arith_error("zero leading row");

    DiffOp v(1, 1);
    DiffOp residual = rhs;
    for (int q = m; q >= 0; --q) {
        RatFun wq = residual.coeff(q + ell).at(0, pivot) / lead.at(0, pivot);
        if (!wq.is_zero()) {
            DiffOp tq = DiffOp::term(q, wq);
            v += tq;
            residual -= tq * u;
        }
        if (residual.order() >= q + ell) {
            out.detail = "no scalar solution: residual persists at order " +
                         std::to_string(residual.order());
            return out;
        }
    }
    if (!residual.is_zero()) {
        out.detail = "residual nonzero below the leading orders";
        return out;
    }
    out.found = true;
    out.v = v;
    return out;
}

DiffOp poly_at_operator(const Poly& p, const DiffOp& a) {
    if (!a.is_square()) throw arith_error("polynomial of a non-square operator");
    DiffOp acc = DiffOp::zero(a.rows());
    DiffOp pw = DiffOp::identity(a.rows());
    for (int k = 0; k <= p.degree(); ++k) {
        if (!p.coeff(k).is_zero()) acc += pw.scaled(p.coeff(k));
        if (k < p.degree()) pw = pw * a;
    }
    return acc;
}

ExpressResult express_in_classical(const DiffOp& v, const DiffOp& d) {
    ExpressResult out;
    if (!v.is_scalar() || !d.is_scalar()) throw arith_error("express requires scalar operators");
    int ord_d = d.order();
    if (ord_d <= 0) throw arith_error("base operator must have positive order");
    std::vector<CRat> coeffs;
    DiffOp r = v;
    while (!r.is_zero()) {
        int ord_r = r.order();
        if (ord_r % ord_d != 0) {
            out.detail = "order " + std::to_string(ord_r) + " is not a multiple of " +
                         std::to_string(ord_d);
            return out;
        }
        int k = ord_r / ord_d;
        DiffOp dk = poly_at_operator(Poly::monomial(k), d);
        RatFun ratio = r.coeff(ord_r).at(0, 0) / dk.coeff(ord_r).at(0, 0);
        if (!ratio.is_constant()) {
            out.detail = "non-constant leading ratio at step k = " + std::to_string(k);
            return out;
        }
        CRat pk = ratio.as_constant();
        if (static_cast<int>(coeffs.size()) < k + 1) coeffs.resize(k + 1);
        coeffs[static_cast<size_t>(k)] = pk;
        r -= dk.scaled(pk);
        if (!r.is_zero() && r.order() >= ord_r) {
            out.detail = "no progress at step k = " + std::to_string(k);
            return out;
        }
    }
    out.p = Poly(std::move(coeffs));
    if (poly_at_operator(out.p, d) != v) {
        out.detail = "round-trip expansion mismatch";
        out.p = Poly();
        return out;
    }
    out.ok = true;
    return out;
}

AdjointChecks adjoint_symmetry_checks(const DiffOp& u, const DiffOp& v, const Weight& w) {
    AdjointChecks out;
    const RatFun& s = w.kernel().log_derivative();
    int ell = u.order();
    int m = v.order();

    out.b_hat = u.substitute_partial(-s) * DiffOp::mult(w.factor()) * u.formal_star();
    bool order_ok = out.b_hat.order() == 2 * ell;
    if (order_ok) out.rho = out.b_hat.coeff(2 * ell).at(0, 0);

    DiffOp lhs = v.substitute_partial(-s) * out.b_hat;
    DiffOp rhs = out.b_hat * v.formal_star();
    out.symmetry = make_cert("v b = b v*", order_ok && lhs == rhs,
                             order_ok ? "symmetry identity fails" : "b has unexpected order");

    if (order_ok && m >= 1) {
        RatFun vm = v.coeff(m).at(0, 0);
        RatFun vm1 = v.coeff(m - 1).at(0, 0);
        RatFun sign(CRat((m % 2 == 0) ? 1 : -1));
        RatFun log_r = s + out.rho.derivative() / out.rho;
        RatFun residual = vm1 + sign * vm1.conj() + RatFun(CRat(2 * ell - m)) * vm.derivative() -
                          RatFun(CRat(m)) * log_r * vm;
        out.ode_residual = make_cert("first-order ODE residual for r", residual.is_zero(),
                                     "residual is nonzero");
    } else if (order_ok && m == 0) {
        out.ode_residual = make_cert("first-order ODE residual for r", true, "",
                                     "vacuous: v is constant");
    } else {
        out.ode_residual = make_cert("first-order ODE residual for r", false,
                                     "b has unexpected order");
    }

    bool endpoint_ok = true;
    std::string note = "no finite endpoints";
    RatFun vm = v.is_zero() ? RatFun() : v.coeff(v.order()).at(0, 0);
    for (const auto& ep : {w.kernel().left_endpoint(), w.kernel().right_endpoint()}) {
        if (!ep) continue;
        note.clear();
        CRat x0(*ep);
        if (vm.has_pole_at(x0) || !vm.eval(x0).is_zero()) {
            endpoint_ok = false;
            note = "leading coefficient does not vanish at " + rat_to_string(*ep);
        }
    }
    out.endpoint = make_cert("leading coefficient of v vanishes at finite endpoints",
                             endpoint_ok, note, note);
    return out;
}

std::vector<int> exceptional_degrees(const DiffOp& d, int n_max) {
    if (!d.is_scalar()) throw arith_error("exceptional degrees needs a scalar operator");
    if (d.is_zero()) throw arith_error("zero operator");

    Poly q = monic_den_lcm(d);
    int dq = q.degree();
    std::map<int, Poly> b;
    for (const auto& [j, a] : d.terms()) {
        RatFun cleared = a.at(0, 0) * RatFun(q);
        b[j] = cleared.as_poly();
        if (b[j].degree() > dq + j)
            throw arith_error("operator is not tame at infinity; cannot decide exactly");
    }

    std::vector<int> exceptional;
    for (int n = 0; n <= n_max; ++n) {
        // the (unique possible) eigenvalue, forced by the top coefficient
        CRat lambda(0);
        for (const auto& [j, bj] : b) {
            Rat ff(1);
            for (int t = 0; t < j; ++t) ff *= Rat(n - t);
            lambda += CRat(ff) * bj.coeff(dq + j);
        }
        auto column = [&](int k) {
            Poly col;
            for (const auto& [j, bj] : b) {
                if (j > k) continue;
                Rat fall(1);
                for (int t = 0; t < j; ++t) fall *= Rat(k - t);
                col += (Poly::monomial(k - j) * bj).scaled(CRat(fall));
            }
            col -= (Poly::monomial(k) * q).scaled(lambda);
            return col;
        };
        int rows = n + dq + 1;
        CMat a(rows, n), rhs(rows, 1);
        for (int k = 0; k < n; ++k) {
            Poly col = column(k);
            for (int s = 0; s < rows; ++s) a.at(s, k) = col.coeff(s);
        }
        Poly known = column(n);
        for (int s = 0; s < rows; ++s) rhs.at(s, 0) = -known.coeff(s);
        CMat sol;
        if (!solve_consistent(a, rhs, sol)) exceptional.push_back(n);
    }
    return exceptional;
}

DiffOp diag_op(const std::vector<DiffOp>& scalar_ops) {
    int dim = static_cast<int>(scalar_ops.size());
    DiffOp out(dim, dim);
    for (int i = 0; i < dim; ++i) {
        if (!scalar_ops[static_cast<size_t>(i)].is_scalar())
            throw arith_error("diag_op expects scalar operators");
        for (const auto& [j, a] : scalar_ops[static_cast<size_t>(i)].terms()) {
            RFMat c = out.coeff(j);
            c.at(i, i) = a.at(0, 0);
            out.set_coeff(j, c);
        }
    }
    return out;
}

Certificate check_conjugacy(const DiffOp& h, const DiffOp& d, const DiffOp& dt,
                            const std::string& name) {
    Certificate c;
    c.name = name;
    c.status = (h * d == dt * h) ? CertStatus::Pass : CertStatus::Fail;
    if (c.status == CertStatus::Fail) c.detail = "h d != dt h";
    return c;
}

Certificate check_intertwine(const DiffOp& u_op, const DiffOp& d,
                             const std::vector<DiffOp>& targets, const std::string& name) {
    Certificate c;
    c.name = name;
    c.status = (u_op * d == diag_op(targets) * u_op) ? CertStatus::Pass : CertStatus::Fail;
    if (c.status == CertStatus::Fail) c.detail = "U D != diag(...) U";
    return c;
}

std::vector<Certificate> check_darboux_factorization(const DiffOp& t, const DiffOp& tt,
                                                     const std::vector<DiffOp>& ds,
                                                     const std::vector<Poly>& ps, const Poly& q,
                                                     const std::vector<DiffOp>& vs) {
    std::vector<Certificate> out;
    int dim = t.rows();
    std::vector<DiffOp> targets;
    for (size_t i = 0; i < ds.size(); ++i) {
        DiffOp w = poly_at_operator(ps[i], ds[i]);
        targets.push_back(w * poly_at_operator(q, w));
    }
    out.push_back(make_cert("T Tt = diag(p_i(d_i) q(p_i(d_i)))", t * tt == diag_op(targets),
                            "factorization product mismatch"));
    for (size_t i = 0; i < vs.size(); ++i) {
        CMat e(dim, dim);
        e.at(static_cast<int>(i), static_cast<int>(i)) = CRat(1);
        DiffOp lhs = tt * DiffOp::mult(cmat_to_rf(e)) * t;
        DiffOp rhs = vs[i] * poly_at_operator(q, vs[i]);
        out.push_back(make_cert("Tt E_" + std::to_string(i + 1) + std::to_string(i + 1) +
                                    " T = V q(V)",
                                lhs == rhs, "conjugation identity mismatch"));
    }
    return out;
}

SequenceTransformResult check_sequence_transform(const MOPSequence& seq, const MOPSequence& seq_t,
                                                 const DiffOp& t, const RFMat& f, int n_win) {
    SequenceTransformResult out;
    if (n_win > seq.n_max() || n_win > seq_t.n_max())
        throw arith_error("sequences not built far enough");
    DiffOp tf = t * DiffOp::mult(f);
    out.ok = true;
    for (int n = 0; n <= n_win; ++n) {
        PolyMat x = tf.apply_poly(seq.P(n));
        if (poly_mat_degree(x) > n) {
            out.ok = false;
            out.detail = "transform raises degree at n = " + std::to_string(n);
            return out;
        }
        CMat c = poly_mat_coeff(x, n);
        out.c.push_back(c);
        if (determinant(c).is_zero()) ++out.singular_count;
        if (x != cmat_to_poly(c) * seq_t.P(n)) {
            out.ok = false;
            out.detail = "residual nonzero at n = " + std::to_string(n);
            return out;
        }
    }
    return out;
}

CompletionResult complete_dw_operator(const MOPSequence& seq, const PolyMat& lambda, int order,
                                      int n_win) {
    return complete_dw_operator_masked(seq, lambda, {}, order, n_win, false);
}

CompletionResult complete_dw_operator_masked(const MOPSequence& seq, const PolyMat& lambda_known,
                                             const std::vector<std::pair<int, int>>& unknown,
                                             int order, int n_win, bool w_symmetric) {
    CompletionResult out;
    int dim = seq.weight().size();
    if (n_win > seq.n_max()) throw arith_error("sequence not built far enough");

    // operator unknowns (j, r, c, t) with t <= j, then eigenvalue unknowns
    // (entry, degree in n up to the order)
    struct Slot {
        int j, r, c, t;
    };
    std::vector<Slot> slots;
    for (int j = 0; j <= order; ++j)
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c)
                for (int t = 0; t <= j; ++t) slots.push_back({j, r, c, t});
    int op_unknowns = static_cast<int>(slots.size());
    int lam_deg = order;
    int unknowns = op_unknowns + static_cast<int>(unknown.size()) * (lam_deg + 1);

    std::vector<std::vector<PolyMat>> derivs;  // derivs[n][j] = P(n)^(j)
    for (int n = 0; n <= n_win; ++n) {
        std::vector<PolyMat> ds;
        ds.push_back(seq.P(n));
        for (int j = 1; j <= order; ++j)
            ds.push_back(ds.back().map([](const Poly& p) { return p.derivative(); }));
        derivs.push_back(std::move(ds));
    }

    // rows for the eigenvalue equations, then optionally for symmetry
    int eigen_rows = 0;
    std::vector<int> row_base(n_win + 1, 0);
    for (int n = 0; n <= n_win; ++n) {
        row_base[static_cast<size_t>(n)] = eigen_rows;
        eigen_rows += dim * dim * (n + order + 1);
    }

    std::vector<DiffOp> sym_residuals;  // dagger(e) - e per operator slot
    Poly sym_den(1);
    int sym_rows = 0, sym_max_order = 0, sym_max_deg = 0;
    if (w_symmetric) {
        for (const Slot& sl : slots) {
            PolyMat c(dim, dim);
            c.at(sl.r, sl.c) = Poly::monomial(sl.t);
            DiffOp e = DiffOp::from_coeff(sl.j, poly_to_rf(c));
            DiffOp res = formal_dagger(e, seq.weight()) - e;
            sym_residuals.push_back(res);
            for (const auto& [q, m] : res.terms())
                for (int i = 0; i < dim; ++i)
                    for (int cc = 0; cc < dim; ++cc) sym_den = poly_lcm(sym_den, m.at(i, cc).den());
        }
        for (auto& res : sym_residuals) {
            res = res.scaled(RatFun(sym_den));
            sym_max_order = std::max(sym_max_order, res.order());
            for (const auto& [q, m] : res.terms())
                for (int i = 0; i < dim; ++i)
                    for (int cc = 0; cc < dim; ++cc) {
                        if (!m.at(i, cc).is_polynomial())
                            throw arith_error("symmetry residual denominator clearing failed");
                        sym_max_deg = std::max(sym_max_deg, m.at(i, cc).num().degree());
                    }
        }
        sym_rows = (sym_max_order + 1) * dim * dim * (sym_max_deg + 1);
    }

    CMat a(eigen_rows + sym_rows, unknowns), rhs(eigen_rows + sym_rows, 1);
    for (int n = 0; n <= n_win; ++n) {
        PolyMat target = cmat_to_poly(eval_lambda(lambda_known, n)) * seq.P(n);
        int width = n + order + 1;
        for (int i = 0; i < dim; ++i)
            for (int c = 0; c < dim; ++c)
                for (int s = 0; s < width; ++s) {
                    int row = row_base[static_cast<size_t>(n)] + (i * dim + c) * width + s;
                    rhs.at(row, 0) = target.at(i, c).coeff(s);
                    for (int u = 0; u < op_unknowns; ++u) {
                        const Slot& sl = slots[static_cast<size_t>(u)];
                        if (sl.c != c) continue;
                        a.at(row, u) = derivs[static_cast<size_t>(n)][static_cast<size_t>(sl.j)]
                                           .at(i, sl.r)
                                           .coeff(s - sl.t);
                    }
                    for (size_t m = 0; m < unknown.size(); ++m) {
                        auto [lr, lc] = unknown[m];
                        if (i != lr) continue;
                        CRat npow(1);
                        for (int e = 0; e <= lam_deg; ++e) {
                            int u = op_unknowns + static_cast<int>(m) * (lam_deg + 1) + e;
                            a.at(row, u) -= npow * seq.P(n).at(lc, c).coeff(s);
                            npow *= CRat(n);
                        }
                    }
                }
    }
    if (w_symmetric) {
        for (int u = 0; u < op_unknowns; ++u) {
            const DiffOp& res = sym_residuals[static_cast<size_t>(u)];
            for (const auto& [q, m] : res.terms())
                for (int i = 0; i < dim; ++i)
                    for (int cc = 0; cc < dim; ++cc) {
                        const Poly& p = m.at(i, cc).num();
                        for (int s = 0; s <= p.degree(); ++s) {
                            int row = eigen_rows + ((q * dim + i) * dim + cc) * (sym_max_deg + 1) + s;
                            a.at(row, u) = p.coeff(s);
                        }
                    }
        }
    }

    CMat sol;
    int free_vars = 0;
    if (!solve_consistent(a, rhs, sol, &free_vars)) {
        out.detail = "no operator matches the eigenvalue and symmetry constraints";
        return out;
    }
    out.unique = free_vars == 0;

    DiffOp d(dim, dim);
    for (int j = 0; j <= order; ++j) {
        PolyMat coeff(dim, dim);
        for (int u = 0; u < op_unknowns; ++u) {
            const Slot& sl = slots[static_cast<size_t>(u)];
            if (sl.j != j || sol.at(u, 0).is_zero()) continue;
            coeff.at(sl.r, sl.c) += Poly::monomial(sl.t, sol.at(u, 0));
        }
        d.set_coeff(j, poly_to_rf(coeff));
    }
    out.lambda = lambda_known;
    for (size_t m = 0; m < unknown.size(); ++m) {
        std::vector<CRat> cs(static_cast<size_t>(lam_deg + 1));
        for (int e = 0; e <= lam_deg; ++e)
            cs[static_cast<size_t>(e)] = sol.at(op_unknowns + static_cast<int>(m) * (lam_deg + 1) + e, 0);
        out.lambda.at(unknown[m].first, unknown[m].second) = Poly(std::move(cs));
    }
    out.found = true;
    out.d = d;
    return out;
}

}  // namespace mop
