#include "mop/driver.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "mop/examples.hpp"
#include "mop/fourier.hpp"
#include "mop/printer.hpp"
#include "mop/structure.hpp"

namespace mop {

namespace {

struct CommonArgs {
    std::string weight_name;
    std::vector<std::string> params;  // name=value
    std::string out_path;
    std::string format = "json";
    int n_win = 12;
    int order_cap = 6;
};

std::map<std::string, Rat> parse_params(const std::vector<std::string>& items) {
    std::map<std::string, Rat> out;
    for (const auto& item : items) {
        size_t eq = item.find('=');
        if (eq == std::string::npos)
            throw arith_error("parameter must be name=rational: " + item);
        out[item.substr(0, eq)] = rat_from_string(item.substr(eq + 1));
    }
    return out;
}

// operator inputs: a path when it ends in .mop, inline source otherwise
std::string load_op_source(const std::string& value) {
    if (value.size() > 4 && value.substr(value.size() - 4) == ".mop") {
        std::ifstream f(value);
        if (!f) throw arith_error("cannot read operator file: " + value);
        std::string src((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
        return src;
    }
    return value;
}

int finish(Report& rep, const CommonArgs& args) {
    std::string body = args.format == "text" ? rep.to_text() : rep.to_json();
    if (args.out_path.empty())
        std::cout << body;
    else
        write_file(args.out_path, body);
    return rep.exit_code();
}

void add_common(CLI::App* cmd, CommonArgs& args, bool with_weight = true) {
    if (with_weight) cmd->add_option("--weight", args.weight_name, "built-in weight name");
    cmd->add_option("--param,-p", args.params, "parameter binding name=rational");
    for (const char* p : {"a", "b", "r"})
        cmd->add_option_function<std::string>(
            std::string("--") + p,
            [&args, p](const std::string& v) { args.params.push_back(std::string(p) + "=" + v); },
            std::string("shorthand for -p ") + p + "=VALUE");
    cmd->add_option("--out", args.out_path, "write the report to this path");
    cmd->add_option("--format", args.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--nwin", args.n_win, "verification window in n");
}

Weight resolve_weight(const CommonArgs& args) {
    if (args.weight_name.empty()) throw arith_error("--weight is required");
    return make_weight(args.weight_name, parse_params(args.params));
}

ParseContext make_ctx(const CommonArgs& args) {
    return ParseContext{parse_params(args.params), 2};
}

Certificate boolean_cert(const std::string& name, bool ok, const std::string& detail = "") {
    return Certificate{name, ok ? CertStatus::Pass : CertStatus::Fail, ok ? "" : detail};
}

DiffOp parse_op_for(const Weight& w, const std::string& value, const ParseContext& ctx) {
    DiffOp d = parse_expression(load_op_source(value), ctx);
    if (d.is_scalar() && w.size() > 1) d = d.promoted(w.size());
    return d;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"exact matrix orthogonal polynomial and operator algebra toolkit"};
    app.require_subcommand(1);

    CommonArgs common;
    std::vector<std::string> op_values;
    std::vector<std::string> central_values;
    std::vector<std::string> target_values;
    std::string u_value, d_value, h_value, dtilde_value;
    int n_max = 8;
    unsigned long long seed = 7;
    int spec_count = 3;
    std::string family;

    CLI::App* mops = app.add_subcommand("mops", "build monic polynomials, norms and recurrence");
    add_common(mops, common);
    mops->add_option("--nmax", n_max, "build the sequence up to this degree");

    CLI::App* check = app.add_subcommand("check-dw", "eigenvalue membership test");
    add_common(check, common);
    check->add_option("--op", op_values, "operator (.mop path or inline)")->required();

    CLI::App* adj = app.add_subcommand("adjoint", "formal W-adjoint of an operator");
    add_common(adj, common);
    adj->add_option("--op", op_values, "operator (.mop path or inline)")->required();

    CLI::App* orth = app.add_subcommand("orthosystem", "verify an orthogonal system");
    add_common(orth, common);
    orth->add_option("--op", op_values, "system members, repeatable")->required();
    orth->add_option("--central-op", central_values,
                     "generators for the optional centrality certificate");

    CLI::App* diag =
        app.add_subcommand("diagonalize", "cyclic generators, U(x) and U W U* for a system");
    add_common(diag, common);
    diag->add_option("--op", op_values, "system members, repeatable")->required();
    diag->add_option("--order-cap", common.order_cap, "generator order cap");

    CLI::App* darboux = app.add_subcommand("darboux", "verify conjugation/intertwining data");
    add_common(darboux, common);
    darboux->add_option("--u", u_value, "row-stacked operator U");
    darboux->add_option("--d", d_value, "operator to intertwine");
    darboux->add_option("--target", target_values, "diagonal targets, one per row");
    darboux->add_option("--h-op", h_value, "conjugating operator h (scalar mode)");
    darboux->add_option("--dtilde", dtilde_value, "conjugated operator (scalar mode)");

    CLI::App* exc = app.add_subcommand("exceptional", "degrees without polynomial eigenfunctions");
    add_common(exc, common, false);
    exc->add_option("--op", op_values, "scalar operator (.mop path or inline)")->required();
    exc->add_option("--nmax", n_max, "largest degree to decide");

    CLI::App* repro = app.add_subcommand("reproduce", "run a built-in 2x2 family end to end");
    add_common(repro, common, false);
    repro->add_option("family", family, "hermite, laguerre or jacobi")
        ->required()
        ->check(CLI::IsMember({"hermite", "laguerre", "jacobi"}));
    repro->add_option("--seed", seed, "seed for the random parameter specializations");
    repro->add_option("--specializations", spec_count, "how many specializations to run");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            std::cout << app.help();
            return 0;
        }
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (*mops) {
            Weight w = resolve_weight(common);
            Report rep("mops");
            rep.add_input("weight", w.describe());
            MOPSequence seq = MOPSequence::build(w, n_max);
            bool ortho = true, posdef = true, rec = true;
            for (int n = 0; n <= n_max; ++n) {
                for (int m = 0; m < n; ++m)
                    if (!seq.inner_product(seq.P(n), seq.P(m)).is_zero()) ortho = false;
                if (!is_positive_definite(seq.H(n))) posdef = false;
                rep.add_value("P(" + std::to_string(n) + ")", show(seq.P(n)));
                rep.add_value("H(" + std::to_string(n) + ")", show(seq.H(n)));
            }
            for (int n = 0; n + 1 <= n_max; ++n) {
                if (!seq.recurrence_residual(n).is_zero()) rec = false;
                rep.add_value("B(" + std::to_string(n) + ")", show(seq.B(n)));
                if (n >= 1) rep.add_value("C(" + std::to_string(n) + ")", show(seq.C(n)));
            }
            rep.add(boolean_cert("pairwise orthogonality", ortho));
            rep.add(boolean_cert("norms positive definite", posdef));
            rep.add(boolean_cert("recurrence residual zero", rec));
            return finish(rep, common);
        }

        if (*check) {
            Weight w = resolve_weight(common);
            Report rep("check-dw");
            rep.add_input("weight", w.describe());
            DiffOp d = parse_op_for(w, op_values.at(0), make_ctx(common));
            rep.add_input("operator", show(d));
            int margin = d.has_polynomial_coeffs() ? std::max(2, d.max_coeff_degree()) : 2;
            MOPSequence seq = MOPSequence::build(w, common.n_win + margin);
            DWReport m = dw_membership(d, seq, common.n_win);
            Certificate c = boolean_cert("operator is in D(W)", m.accepted, m.detail);
            if (!m.accepted && m.reject_n >= 0)
                c.detail = "reject witness n = " + std::to_string(m.reject_n);
            rep.add(c);
            if (m.accepted) {
                rep.add_value("lambda", show_lambda(m.lambda));
                rep.add_value("window", std::to_string(m.window));
                rep.add_value("degree_bound", std::to_string(m.degree_bound));
                // band table of the expansion P(n).D = sum C(n,j) P(j)
                BandReport br = band_representation(d, seq, common.n_win);
                rep.add(boolean_cert("band expansion reproduces the action", br.expansion_ok));
                rep.add(boolean_cert("band width within the coefficient degrees", br.band_ok,
                                     br.detail));
                rep.add_value("band_width_forward", std::to_string(br.fwd_width));
                rep.add_value("band_width_backward", std::to_string(br.back_width));
                int show_n = std::min(5, br.band.window());
                for (const auto& [offset, vals] : br.band.diagonals()) {
                    std::string row;
                    for (int n = 0; n <= show_n; ++n)
                        row += (n ? ";" : "") +
                               (n + offset < 0 ? std::string("-") : show(vals[static_cast<size_t>(n)]));
                    rep.add_value("band_diagonal(" + std::to_string(offset) + ")", row);
                }
                ShiftOp l = build_shift_l(seq);
                FourierTestReport ft = left_fourier_test(br.band, l, d.order());
                rep.add(Certificate{"iterated commutators with L vanish",
                                    ft.status == TestStatus::Accept
                                        ? CertStatus::Pass
                                        : (ft.status == TestStatus::Inconclusive
                                               ? CertStatus::Inconclusive
                                               : CertStatus::Fail),
                                    ft.detail});
                if (ft.status == TestStatus::Accept)
                    rep.add_value("commutator_stabilization_k", std::to_string(ft.k));
            }
            return finish(rep, common);
        }

        if (*adj) {
            Weight w = resolve_weight(common);
            Report rep("adjoint");
            rep.add_input("weight", w.describe());
            DiffOp d = parse_op_for(w, op_values.at(0), make_ctx(common));
            rep.add_input("operator", show(d));
            DiffOp dag = formal_dagger(d, w);
            rep.add_value("dagger", show(dag));
            rep.add(boolean_cert("dagger is involutive", formal_dagger(dag, w) == d));
            rep.add_value("w_symmetric", dag == d ? "true" : "false");
            return finish(rep, common);
        }

        if (*orth) {
            Weight w = resolve_weight(common);
            Report rep("orthosystem");
            rep.add_input("weight", w.describe());
            MOPSequence seq = MOPSequence::build(w, common.n_win + 2);
            std::vector<DiffOp> vs, central;
            for (const auto& v : op_values) vs.push_back(parse_op_for(w, v, make_ctx(common)));
            for (const auto& v : central_values)
                central.push_back(parse_op_for(w, v, make_ctx(common)));
            OrthSystem sys = verify_orthogonal_system(vs, w, seq, common.n_win, central);
            rep.add_all(sys.certificates);
            rep.add_value("lambda_sum", show_lambda(sys.lambda_sum));
            rep.add_value("rank_lower_bound", std::to_string(sys.rank_lower_bound));
            return finish(rep, common);
        }

        if (*diag) {
            Weight w = resolve_weight(common);
            Report rep("diagonalize");
            rep.add_input("weight", w.describe());
            MOPSequence seq = MOPSequence::build(w, common.n_win + 2);
            std::vector<DiffOp> vs;
            for (const auto& v : op_values) vs.push_back(parse_op_for(w, v, make_ctx(common)));
            OrthSystem sys = verify_orthogonal_system(vs, w, seq, common.n_win);
            rep.add_all(sys.certificates);
            std::vector<DiffOp> us;
            bool found_all = true;
            for (size_t i = 0; i < vs.size(); ++i) {
                auto gen = cyclic_generator(vs, static_cast<int>(i), common.order_cap);
                rep.add(Certificate{"cyclic generator " + std::to_string(i + 1),
                                    gen.found ? CertStatus::Pass : CertStatus::Inconclusive,
                                    gen.detail});
                if (!gen.found) {
                    found_all = false;
                    continue;
                }
                rep.add_value("u" + std::to_string(i + 1), show(gen.u));
                us.push_back(gen.u);
            }
            if (found_all) {
                UData ud = build_u(us);
                rep.add(boolean_cert("U(x) invertible", ud.invertible, "det U(x) = 0"));
                rep.add_value("U(x)", show(ud.u_x));
                if (ud.invertible) {
                    DiagonalizeResult dr = diagonalize_weight(ud.u_x, w);
                    rep.add(boolean_cert("U W U* diagonal", dr.diagonal, dr.detail));
                    if (dr.diagonal) {
                        for (size_t i = 0; i < dr.rho.size(); ++i)
                            rep.add_value("rho" + std::to_string(i + 1), show(dr.rho[i]));
                        rep.add_value("kernel", w.kernel().describe());
                    }
                    for (size_t i = 0; i < vs.size(); ++i) {
                        auto vi = compute_vi(us[i], vs[i]);
                        rep.add(boolean_cert("v" + std::to_string(i + 1) + " solves v u = u V",
                                             vi.found, vi.detail));
                        if (vi.found) rep.add_value("v" + std::to_string(i + 1), show(vi.v));
                    }
                }
            }
            return finish(rep, common);
        }

        if (*darboux) {
            Weight w = resolve_weight(common);
            Report rep("darboux");
            rep.add_input("weight", w.describe());
            ParseContext ctx = make_ctx(common);
            if (!h_value.empty()) {
                ParseContext sctx{ctx.params, 1};
                DiffOp h = parse_expression(load_op_source(h_value), sctx);
                DiffOp d = parse_expression(load_op_source(d_value), sctx);
                DiffOp dt = parse_expression(load_op_source(dtilde_value), sctx);
                rep.add(check_conjugacy(h, d, dt, "h d = dtilde h"));
            } else {
                if (u_value.empty() || d_value.empty() || target_values.empty())
                    throw arith_error("darboux needs --u, --d and --target (or --h/--dtilde)");
                DiffOp u = parse_expression(load_op_source(u_value), ctx);
                DiffOp d = parse_expression(load_op_source(d_value), ctx);
                std::vector<DiffOp> targets;
                ParseContext sctx{ctx.params, 1};
                for (const auto& t : target_values)
                    targets.push_back(parse_expression(load_op_source(t), sctx));
                rep.add(check_intertwine(u, d, targets, "U D = diag(targets) U"));
            }
            return finish(rep, common);
        }

        if (*exc) {
            Report rep("exceptional");
            ParseContext ctx{parse_params(common.params), 1};
            DiffOp d = parse_expression(load_op_source(op_values.at(0)), ctx);
            rep.add_input("operator", show(d));
            auto degs = exceptional_degrees(d, n_max);
            std::string list;
            for (int n : degs) list += (list.empty() ? "" : ",") + std::to_string(n);
            rep.add_value("exceptional_degrees", "{" + list + "}");
            rep.add_value("nmax", std::to_string(n_max));
            return finish(rep, common);
        }

        if (*repro) {
            Report rep("reproduce-" + family);
            auto params = parse_params(common.params);
            Rng rng(seed);
            rep.add_input("seed", std::to_string(seed));
            rep.add_input("specializations", std::to_string(spec_count));
            for (int k = 0; k < spec_count; ++k) {
                Report run("");
                if (family == "hermite") {
                    Rat a = (k == 0 && params.count("a")) ? params["a"]
                                                          : examples::random_hermite_a(rng);
                    run = examples::hermite_family(a, common.n_win);
                } else if (family == "laguerre") {
                    auto [ra, rb] = examples::random_laguerre_ab(rng);
                    Rat a = (k == 0 && params.count("a")) ? params["a"] : ra;
                    Rat b = (k == 0 && params.count("b")) ? params["b"] : rb;
                    run = examples::laguerre_family(a, b, common.n_win);
                } else {
                    auto [ra, rr] = examples::random_jacobi_ar(rng);
                    Rat a = (k == 0 && params.count("a")) ? params["a"] : ra;
                    Rat r = (k == 0 && params.count("r")) ? params["r"] : rr;
                    run = examples::jacobi_family(a, r, common.n_win);
                }
                std::string tag = "spec" + std::to_string(k + 1) + ": ";
                for (const auto& [key, value] : run.inputs())
                    if (key == "weight") rep.add_input(tag + key, value);
                for (const auto& c : run.certificates()) {
                    Certificate tagged = c;
                    tagged.name = tag + c.name;
                    rep.add(tagged);
                }
                for (const auto& [key, value] : run.values())
                    rep.add_value(tag + key, value);
            }
            return finish(rep, common);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const arith_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace mop
