#pragma once

#include "mop/weight.hpp"

namespace mop {

// Normalized scalar moments mu_m / mu_0 of the kernel, m = 0..m_max, exact.
// Derived from integration by parts against s = f'/f; boundary terms vanish
// for each kernel kind under its parameter constraints.
std::vector<Rat> pearson_moments(const ScalarKernel& k, int m_max);

// Normalized matrix moments M_m / mu_0 = sum_k Q_k mu_{m+k}/mu_0 where
// Q(x) = sum_k Q_k x^k.
std::vector<CMat> matrix_moments(const Weight& w, int m_max);

}  // namespace mop
