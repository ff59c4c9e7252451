#pragma once

#include <map>

#include "mop/weight.hpp"

namespace mop {

// Expression DSL for operators and matrices (".mop" inputs):
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ('^' uint)?
//   base   := uint | param | 'x' | 'dx' | '(' expr ')' | matrix
//   matrix := '[' '[' expr (',' expr)* ']' (',' '[' ... ']')* ']'
// '*' is the noncommutative operator product; '/' requires an order-zero
// right operand; rationals are written as quotients, e.g. 2/3. Parameters
// come from the declared context and are bound to exact rationals.
struct ParseContext {
    std::map<std::string, Rat> params;
    int size = 2;  // expected matrix size, for validation only
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, int line, int col, int offset)
        : std::runtime_error(msg + " at " + std::to_string(line) + ":" + std::to_string(col)),
          line(line),
          col(col),
          offset(offset) {}
    int line, col, offset;
};

DiffOp parse_expression(const std::string& src, const ParseContext& ctx);

// convenience wrappers with shape checks
RFMat parse_matrf(const std::string& src, const ParseContext& ctx);  // order 0 required
DiffOp parse_scalar_op(const std::string& src, const ParseContext& ctx);

// weight DSL: "name" or "name(p=2/3,q=1)" over the built-in registry
Weight parse_weight_spec(const std::string& src);

}  // namespace mop
