#include "mop/shiftop.hpp"

namespace mop {

int ShiftOp::max_forward() const {
    int m = 0;
    for (const auto& [d, v] : diag_) m = std::max(m, d);
    return m;
}

int ShiftOp::min_backward() const {
    int m = 0;
    for (const auto& [d, v] : diag_) m = std::min(m, d);
    return m;
}

CMat ShiftOp::coeff(int d, int n) const {
    if (n < 0 || n > n_hi_) throw arith_error("shift coefficient outside window");
    auto it = diag_.find(d);
    if (it == diag_.end()) return CMat(n_, n_);
    return it->second[static_cast<size_t>(n)];
}

void ShiftOp::set_coeff(int d, int n, const CMat& value) {
    if (n < 0 || n > n_hi_) throw arith_error("shift coefficient outside window");
    auto it = diag_.find(d);
    if (it == diag_.end()) {
        if (value.is_zero()) return;
        it = diag_.emplace(d, std::vector<CMat>(n_hi_ + 1, CMat(n_, n_))).first;
    }
    it->second[static_cast<size_t>(n)] = value;
}

bool ShiftOp::is_zero() const {
    for (const auto& [d, v] : diag_)
        for (int n = 0; n <= n_hi_; ++n) {
            // entries multiplying a(n+d) with n+d < 0 never act on anything
            if (n + d < 0) continue;
            if (!v[static_cast<size_t>(n)].is_zero()) return false;
        }
    return true;
}

void ShiftOp::prune() {
    for (auto it = diag_.begin(); it != diag_.end();) {
        bool zero = true;
        for (const auto& m : it->second)
            if (!m.is_zero()) {
                zero = false;
                break;
            }
        it = zero ? diag_.erase(it) : std::next(it);
    }
}

ShiftOp ShiftOp::operator-() const {
    ShiftOp r = *this;
    for (auto& [d, v] : r.diag_)
        for (auto& m : v) m = -m;
    return r;
}

ShiftOp operator+(const ShiftOp& a, const ShiftOp& b) {
    if (a.n_ != b.n_) throw arith_error("shift operator size mismatch");
    ShiftOp r(a.n_, std::min(a.n_hi_, b.n_hi_));
    for (const auto& [d, v] : a.diag_)
        for (int n = 0; n <= r.n_hi_; ++n) r.set_coeff(d, n, v[static_cast<size_t>(n)]);
    for (const auto& [d, v] : b.diag_)
        for (int n = 0; n <= r.n_hi_; ++n)
            r.set_coeff(d, n, r.coeff(d, n) + v[static_cast<size_t>(n)]);
    r.prune();
    return r;
}

ShiftOp operator-(const ShiftOp& a, const ShiftOp& b) { return a + (-b); }

ShiftOp operator*(const ShiftOp& a, const ShiftOp& b) {
    if (a.n_ != b.n_) throw arith_error("shift operator size mismatch");
    ShiftOp r(a.n_, std::min(a.n_hi_, b.n_hi_ - std::max(0, a.max_forward())));
    if (r.window_empty()) return r;
    for (const auto& [da, va] : a.diag_)
        for (const auto& [db, vb] : b.diag_) {
            int d = da + db;
            for (int n = 0; n <= r.n_hi_; ++n) {
                // a coefficient reaching a negative index acts on zero
                if (n + da < 0) continue;
                const CMat& left = va[static_cast<size_t>(n)];
                const CMat& right = vb[static_cast<size_t>(n + da)];
                if (left.is_zero() || right.is_zero()) continue;
                r.set_coeff(d, n, r.coeff(d, n) + left * right);
            }
        }
    r.prune();
    return r;
}

ShiftOp ShiftOp::scaled(const CRat& s) const {
    ShiftOp r = *this;
    for (auto& [d, v] : r.diag_)
        for (auto& m : v) m = m.scaled(s);
    r.prune();
    return r;
}

ShiftOp ShiftOp::star() const {
    // (M*)_e(n) = M_{-e}(n+e)^H
    int fwd_after = -min_backward();
    ShiftOp r(n_, n_hi_ - fwd_after);
    if (r.window_empty()) return r;
    for (const auto& [d, v] : diag_) {
        int e = -d;
        for (int n = 0; n <= r.n_hi_; ++n) {
            int src = n + e;
            if (src < 0) continue;  // multiplies a vanishing sequence value
            r.set_coeff(e, n, v[static_cast<size_t>(src)].conj_transpose());
        }
    }
    r.prune();
    return r;
}

ShiftOp ShiftOp::conjugated_by(const std::vector<CMat>& s) const {
    int s_hi = static_cast<int>(s.size()) - 1;
    ShiftOp r(n_, std::min(n_hi_, s_hi - std::max(0, max_forward())));
    if (r.window_empty()) return r;
    std::vector<CMat> sinv(s.size());
    for (size_t i = 0; i < s.size(); ++i) sinv[i] = inverse(s[i]);
    for (const auto& [d, v] : diag_)
        for (int n = 0; n <= r.n_hi_; ++n) {
            if (n + d < 0) continue;
            r.set_coeff(d, n, s[static_cast<size_t>(n)] * v[static_cast<size_t>(n)] *
                                  sinv[static_cast<size_t>(n + d)]);
        }
    r.prune();
    return r;
}

std::vector<PolyMat> ShiftOp::apply(const std::vector<PolyMat>& p) const {
    int len = static_cast<int>(p.size());
    int out_hi = std::min(n_hi_, len - 1 - std::max(0, max_forward()));
    std::vector<PolyMat> out;
    if (out_hi < 0 || p.empty()) return out;
    int dim = p[0].rows();
    for (int n = 0; n <= out_hi; ++n) {
        PolyMat acc(dim, dim);
        for (const auto& [d, v] : diag_) {
            if (n + d < 0 || n + d >= len) continue;
            acc += cmat_to_poly(v[static_cast<size_t>(n)]) * p[static_cast<size_t>(n + d)];
        }
        out.push_back(std::move(acc));
    }
    return out;
}

ShiftOp ShiftOp::truncated(int new_hi) const {
    if (new_hi >= n_hi_) return *this;
    ShiftOp r(n_, new_hi);
    if (r.window_empty()) return r;
    for (const auto& [d, v] : diag_)
        for (int n = 0; n <= new_hi; ++n) r.set_coeff(d, n, v[static_cast<size_t>(n)]);
    r.prune();
    return r;
}

ShiftOp commutator(const ShiftOp& a, const ShiftOp& b) { return a * b - b * a; }

ShiftOp build_shift_l(const MOPSequence& seq) {
    int dim = seq.weight().size();
    int hi = seq.n_max() - 1;
    ShiftOp l(dim, hi);
    for (int n = 0; n <= hi; ++n) {
        l.set_coeff(1, n, CMat::identity(dim));
        l.set_coeff(0, n, seq.B(n));
        if (n >= 1) l.set_coeff(-1, n, seq.C(n));
    }
    return l;
}

ShiftOp discrete_dagger(const ShiftOp& m, const MOPSequence& seq) {
    ShiftOp ms = m.star();
    std::vector<CMat> h;
    h.reserve(seq.n_max() + 1);
    for (int n = 0; n <= seq.n_max(); ++n) h.push_back(seq.H(n));
    return ms.conjugated_by(h);
}

}  // namespace mop
