#include "mop/fourier.hpp"

#include <atomic>

#include "mop/util.hpp"

namespace mop {

PolyMat fourier_image(const DiffOp& d) {
    auto filt = is_degree_filtration_preserving(d);
    if (!filt.preserving) throw arith_error("operator is not degree-filtration preserving");
    int dim = d.rows();
    PolyMat lambda(dim, dim);
    for (const auto& [j, a] : d.terms()) {
        // falling factorial n(n-1)...(n-j+1), exact in the monomial basis
        Poly ff(1);
        for (int t = 0; t < j; ++t)
            ff = ff * Poly(std::vector<CRat>{CRat(-t), CRat(1)});
        CMat top(dim, dim);
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c) top.at(r, c) = a.at(r, c).num().coeff(j);
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c)
                if (!top.at(r, c).is_zero()) lambda.at(r, c) += ff.scaled(top.at(r, c));
    }
    return lambda;
}

CMat eval_lambda(const PolyMat& lambda, long n) { return eval_poly_mat(lambda, CRat(n)); }

DWReport dw_membership(const DiffOp& d, const MOPSequence& seq, int n_win) {
    DWReport rep;
    rep.window = n_win;
    if (n_win > seq.n_max()) throw arith_error("sequence not built far enough for the window");
    auto filt = is_degree_filtration_preserving(d);
    if (!filt.preserving) {
        rep.accepted = false;
        rep.detail = "not degree-filtration preserving: coefficient of order " +
                     std::to_string(filt.witness->order) + " at entry (" +
                     std::to_string(filt.witness->row) + "," + std::to_string(filt.witness->col) +
                     ")";
        return rep;
    }
    rep.lambda = fourier_image(d);
    rep.degree_bound = d.order() + std::max(0, d.max_coeff_degree());

    std::vector<int> fail(n_win + 1, 0);
    std::vector<std::string> fail_detail(n_win + 1);
    parallel_for(n_win + 1, [&](int n) {
        PolyMat lhs = d.apply_poly(seq.P(n));
        PolyMat rhs = cmat_to_poly(eval_lambda(rep.lambda, n)) * seq.P(n);
        if (lhs != rhs) {
            fail[n] = 1;
            fail_detail[n] = "residual nonzero at n = " + std::to_string(n);
        }
    });
    for (int n = 0; n <= n_win; ++n) {
        if (fail[n]) {
            rep.accepted = false;
            rep.reject_n = n;
            rep.detail = fail_detail[n];
            return rep;
        }
    }
    rep.accepted = true;
    return rep;
}

BandReport band_representation(const DiffOp& d, const MOPSequence& seq, int n_win) {
    BandReport rep;
    if (!d.has_polynomial_coeffs())
        throw arith_error("band representation needs polynomial coefficients");
    rep.fwd_width = std::max(0, d.max_coeff_degree());
    if (n_win + rep.fwd_width > seq.n_max())
        throw arith_error("window too small: sequence must extend past n_win by the coefficient degree");

    DiffOp dag = formal_dagger(d, seq.weight());
    if (dag.has_polynomial_coeffs()) rep.back_width = std::max(0, dag.max_coeff_degree());

    rep.band = ShiftOp(seq.weight().size(), n_win);
    rep.expansion_ok = true;
    std::vector<CMat> hinv(n_win + rep.fwd_width + 1);
    for (int j = 0; j < static_cast<int>(hinv.size()); ++j) hinv[j] = inverse(seq.H(j));

    for (int n = 0; n <= n_win; ++n) {
        PolyMat x = d.apply_poly(seq.P(n));
        int jmax = n + rep.fwd_width;
        PolyMat recon(seq.weight().size(), seq.weight().size());
        for (int j = 0; j <= jmax; ++j) {
            CMat c = seq.inner_product(x, seq.P(j)) * hinv[j];
            if (!c.is_zero()) {
                rep.band.set_coeff(j - n, n, c);
                recon += cmat_to_poly(c) * seq.P(j);
            }
        }
        if (recon != x) rep.expansion_ok = false;
    }

    if (rep.back_width < 0) {
        rep.band_ok = false;
        rep.detail = "W-adjoint has non-polynomial coefficients; no band bound claimed";
        return rep;
    }
    rep.band_ok = true;
    for (const auto& [dd, vals] : rep.band.diagonals()) {
        if (dd >= -rep.back_width) continue;
        for (int n = 0; n <= rep.band.window(); ++n)
            if (n + dd >= 0 && !vals[static_cast<size_t>(n)].is_zero()) {
                rep.band_ok = false;
                rep.detail = "nonzero C(n,j) at n = " + std::to_string(n) +
                             ", j = " + std::to_string(n + dd);
            }
    }
    return rep;
}

FourierTestReport left_fourier_test(const ShiftOp& m, const ShiftOp& l, int k_max) {
    FourierTestReport rep;
    ShiftOp cur = m;
    for (int k = 0; k <= k_max; ++k) {
        cur = commutator(l, cur);
        if (cur.window_empty()) {
            rep.status = TestStatus::Inconclusive;
            rep.detail = "window exhausted before stabilization at k = " + std::to_string(k);
            return rep;
        }
        if (cur.is_zero()) {
            rep.status = TestStatus::Accept;
            rep.k = k;
            return rep;
        }
    }
    rep.status = TestStatus::Reject;
    rep.detail = "no vanishing iterated commutator up to k_max = " + std::to_string(k_max);
    return rep;
}

}  // namespace mop
