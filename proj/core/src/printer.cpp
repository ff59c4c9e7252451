#include "mop/printer.hpp"

namespace mop {

namespace {

bool needs_parens(const std::string& s) {
    // composite if a top-level + or - appears past the leading sign
    int depth = 0;
    for (size_t k = 0; k < s.size(); ++k) {
        char c = s[k];
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (depth == 0 && k > 0 && (c == '+' || c == '-')) return true;
    }
    return false;
}

std::string coeff_prefix(const CRat& c, bool& negated) {
    negated = false;
    if (c.is_one()) return "";
    if (c == CRat(-1)) {
        negated = true;
        return "";
    }
    std::string s = crat_to_string(c);
    if (!c.is_real() && c.re() != 0) s = "(" + s + ")";
    return s + "*";
}

}  // namespace

std::string show(const Rat& q) { return rat_to_string(q); }

std::string show(const CRat& z) { return crat_to_string(z); }

std::string show(const Poly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        CRat c = p.coeff(k);
        if (c.is_zero()) continue;
        std::string term;
        if (k == 0) {
            term = crat_to_string(c);
        } else {
            bool negated = false;
            std::string pre = coeff_prefix(c, negated);
            term = pre + var + (k > 1 ? "^" + std::to_string(k) : "");
            if (negated) term = "-" + term;
        }
        if (out.empty())
            out = term;
        else if (!term.empty() && term[0] == '-')
            out += term;
        else
            out += "+" + term;
    }
    return out;
}

std::string show(const RatFun& f, const std::string& var) {
    if (f.is_polynomial()) return show(f.num(), var);
    std::string num = show(f.num(), var);
    std::string den = show(f.den(), var);
    if (needs_parens(num) || num[0] == '-') num = "(" + num + ")";
    den = "(" + den + ")";
    return num + "/" + den;
}

namespace {

template <typename M, typename F>
std::string show_matrix(const M& m, F&& entry) {
    std::string out = "[";
    for (int i = 0; i < m.rows(); ++i) {
        out += "[";
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out += ",";
            out += entry(m.at(i, j));
        }
        out += "]";
        if (i + 1 < m.rows()) out += ",";
    }
    return out + "]";
}

}  // namespace

std::string show(const CMat& m) {
    return show_matrix(m, [](const CRat& c) { return crat_to_string(c); });
}

std::string show(const PolyMat& m, const std::string& var) {
    return show_matrix(m, [&](const Poly& p) { return show(p, var); });
}

std::string show(const RFMat& m, const std::string& var) {
    return show_matrix(m, [&](const RatFun& f) { return show(f, var); });
}

std::string show(const DiffOp& d) {
    if (d.is_zero()) return "0";
    std::string out;
    for (const auto& [j, a] : d.terms()) {
        std::string dx;
        if (j == 1)
            dx = "dx";
        else if (j > 1)
            dx = "dx^" + std::to_string(j);
        std::string coeff;
        if (d.is_scalar()) {
            const RatFun& f = a.at(0, 0);
            coeff = show(f);
            if (j > 0) {
                if (f.is_one()) {
                    coeff = "";
                } else if (needs_parens(coeff) || coeff[0] == '-') {
                    coeff = "(" + coeff + ")";
                }
            }
        } else {
            coeff = show(a);
        }
        std::string term;
        if (j == 0)
            term = coeff;
        else if (coeff.empty())
            term = dx;
        else
            term = dx + "*" + coeff;
        out += out.empty() ? term : " + " + term;
    }
    return out;
}

std::string show_lambda(const PolyMat& m) { return show(m, "n"); }

}  // namespace mop
