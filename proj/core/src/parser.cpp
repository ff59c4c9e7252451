#include "mop/parser.hpp"

#include <cctype>

namespace mop {

namespace {

struct Token {
    enum Kind { Int, Ident, Sym, End } kind;
    std::string text;
    int line, col, offset;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) bump();
        tok_.line = line_;
        tok_.col = col_;
        tok_.offset = static_cast<int>(pos_);
        if (pos_ >= src_.size()) {
            tok_.kind = Token::End;
            tok_.text.clear();
            return;
        }
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) bump();
            tok_.kind = Token::Int;
            tok_.text = src_.substr(start, pos_ - start);
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                bump();
            tok_.kind = Token::Ident;
            tok_.text = src_.substr(start, pos_ - start);
            return;
        }
        tok_.kind = Token::Sym;
        tok_.text = std::string(1, c);
        bump();
    }
    void bump() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }
    const std::string& src_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

class Parser {
public:
    Parser(const std::string& src, const ParseContext& ctx) : lex_(src), ctx_(ctx) {}

    DiffOp parse() {
        DiffOp e = expr();
        if (lex_.peek().kind != Token::End) fail("trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        const Token& t = lex_.peek();
        throw ParseError(msg, t.line, t.col, t.offset);
    }
    bool accept_sym(const std::string& s) {
        if (lex_.peek().kind == Token::Sym && lex_.peek().text == s) {
            lex_.take();
            return true;
        }
        return false;
    }
    void expect_sym(const std::string& s, const std::string& what) {
        if (!accept_sym(s)) fail("expected '" + s + "' " + what);
    }

    static DiffOp promote_pair(DiffOp& a, DiffOp& b) {
        if (a.rows() == b.rows() && a.cols() == b.cols()) return a;
        if (a.is_scalar()) {
            if (b.rows() != b.cols()) return a;  // shapes checked by the operation
            a = a.promoted(b.rows());
        } else if (b.is_scalar()) {
            if (a.rows() != a.cols()) return a;
            b = b.promoted(a.rows());
        }
        return a;
    }

    DiffOp expr() {
        bool neg = accept_sym("-");
        DiffOp acc = term();
        if (neg) acc = -acc;
        for (;;) {
            if (accept_sym("+")) {
                DiffOp rhs = term();
                promote_pair(acc, rhs);
                acc += rhs;
            } else if (accept_sym("-")) {
                DiffOp rhs = term();
                promote_pair(acc, rhs);
                acc -= rhs;
            } else {
                return acc;
            }
        }
    }

    DiffOp term() {
        DiffOp acc = factor();
        for (;;) {
            if (accept_sym("*")) {
                DiffOp rhs = factor();
                promote_pair(acc, rhs);
                acc = acc * rhs;
            } else if (accept_sym("/")) {
                const Token& at = lex_.peek();
                DiffOp rhs = factor();
                if (rhs.order() != 0 || !rhs.is_scalar())
                    throw ParseError("divisor must be an order-zero scalar", at.line, at.col,
                                     at.offset);
                RatFun f = rhs.coeff(0).at(0, 0);
                if (f.is_zero())
                    throw ParseError("division by zero", at.line, at.col, at.offset);
                acc = acc * DiffOp::mult(f.inv()).promoted(acc.cols());
            } else {
                return acc;
            }
        }
    }

    DiffOp factor() {
        DiffOp b = base();
        if (accept_sym("^")) {
            const Token& t = lex_.peek();
            if (t.kind != Token::Int) fail("exponent must be a nonnegative integer");
            long e = std::stol(lex_.take().text);
            if (!b.is_square()) fail("power of a non-square operator");
            DiffOp acc = DiffOp::identity(b.rows());
            for (long i = 0; i < e; ++i) acc = acc * b;
            return acc;
        }
        return b;
    }

    DiffOp base() {
        const Token& t = lex_.peek();
        switch (t.kind) {
            case Token::Int: {
                Rat v(lex_.take().text);
                return DiffOp::mult(RatFun(CRat(v)));
            }
            case Token::Ident: {
                Token id = lex_.take();
                if (id.text == "x") return DiffOp::mult(RatFun::x());
                if (id.text == "dx") return DiffOp::partial(1, 1);
                auto it = ctx_.params.find(id.text);
                if (it == ctx_.params.end())
                    throw ParseError("unknown parameter '" + id.text + "'", id.line, id.col,
                                     id.offset);
                return DiffOp::mult(RatFun(CRat(it->second)));
            }
            case Token::Sym:
                if (t.text == "(") {
                    lex_.take();
                    DiffOp e = expr();
                    expect_sym(")", "to close parenthesis");
                    return e;
                }
                if (t.text == "[") return matrix();
                fail("unexpected symbol '" + t.text + "'");
            case Token::End:
                fail("unexpected end of input");
        }
        fail("unexpected token");
    }

    DiffOp matrix() {
        expect_sym("[", "to open matrix");
        std::vector<std::vector<DiffOp>> rows;
        for (;;) {
            expect_sym("[", "to open matrix row");
            std::vector<DiffOp> row;
            for (;;) {
                DiffOp e = expr();
                if (!e.is_scalar()) fail("matrix entries must be scalar expressions");
                row.push_back(std::move(e));
                if (!accept_sym(",")) break;
            }
            expect_sym("]", "to close matrix row");
            if (!rows.empty() && rows.front().size() != row.size())
                fail("matrix literal is not rectangular");
            rows.push_back(std::move(row));
            if (!accept_sym(",")) break;
        }
        expect_sym("]", "to close matrix");

        int r = static_cast<int>(rows.size());
        int c = static_cast<int>(rows.front().size());
        DiffOp out(r, c);
        int top = 0;
        for (const auto& row : rows)
            for (const auto& e : row) top = std::max(top, e.order());
        for (int j = 0; j <= top; ++j) {
            RFMat coeff(r, c);
            bool any = false;
            for (int i = 0; i < r; ++i)
                for (int k = 0; k < c; ++k) {
                    RatFun f = rows[static_cast<size_t>(i)][static_cast<size_t>(k)].coeff(j).at(0, 0);
                    if (!f.is_zero()) any = true;
                    coeff.at(i, k) = std::move(f);
                }
            if (any) out.set_coeff(j, coeff);
        }
        return out;
    }

    Lexer lex_;
    const ParseContext& ctx_;
};

}  // namespace

DiffOp parse_expression(const std::string& src, const ParseContext& ctx) {
    return Parser(src, ctx).parse();
}

RFMat parse_matrf(const std::string& src, const ParseContext& ctx) {
    DiffOp d = parse_expression(src, ctx);
    if (d.is_zero()) return RFMat(ctx.size, ctx.size);
    if (d.order() != 0) throw ParseError("expected a matrix of functions, found dx", 1, 1, 0);
    return d.coeff(0);
}

DiffOp parse_scalar_op(const std::string& src, const ParseContext& ctx) {
    DiffOp d = parse_expression(src, ctx);
    if (!d.is_scalar()) throw ParseError("expected a scalar operator", 1, 1, 0);
    return d;
}

Weight parse_weight_spec(const std::string& src) {
    auto open = src.find('(');
    std::string name = src.substr(0, open);
    std::map<std::string, Rat> params;
    if (open != std::string::npos) {
        if (src.back() != ')') throw arith_error("weight spec must end with ')'");
        std::string body = src.substr(open + 1, src.size() - open - 2);
        size_t pos = 0;
        while (pos < body.size()) {
            size_t comma = body.find(',', pos);
            std::string item = body.substr(pos, comma == std::string::npos ? comma : comma - pos);
            size_t eq = item.find('=');
            if (eq == std::string::npos) throw arith_error("weight parameter must be name=value");
            params[item.substr(0, eq)] = rat_from_string(item.substr(eq + 1));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    return make_weight(name, params);
}

}  // namespace mop
