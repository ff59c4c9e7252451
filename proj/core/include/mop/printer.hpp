#pragma once

#include "mop/diffop.hpp"

namespace mop {

// Canonical, deterministic textual forms. Rationals print as "p/q" with
// q > 0, polynomials highest degree first, matrices without spaces,
// operators lowest order first.
std::string show(const Rat& q);
std::string show(const CRat& z);
std::string show(const Poly& p, const std::string& var = "x");
std::string show(const RatFun& f, const std::string& var = "x");
std::string show(const CMat& m);
std::string show(const PolyMat& m, const std::string& var = "x");
std::string show(const RFMat& m, const std::string& var = "x");
std::string show(const DiffOp& d);
std::string show_lambda(const PolyMat& m);  // variable n

}  // namespace mop
