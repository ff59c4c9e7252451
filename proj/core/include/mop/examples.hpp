#pragma once

#include "mop/parser.hpp"
#include "mop/report.hpp"
#include "mop/structure.hpp"

namespace mop::examples {

// End-to-end certificate pipelines for the built-in 2x2 weight families.
// Each run constructs the family's operators at one exact parameter
// specialization, checks every identity the family is known to satisfy,
// and returns the full certificate/value report.
Report hermite_family(const Rat& a, int n_win = 12);
Report laguerre_family(const Rat& a, const Rat& b, int n_win = 12);
Report jacobi_family(const Rat& a, const Rat& r, int n_win = 12);

// valid random parameters for each family (bounded numerators/denominators)
Rat random_hermite_a(Rng& rng);
std::pair<Rat, Rat> random_laguerre_ab(Rng& rng);
std::pair<Rat, Rat> random_jacobi_ar(Rng& rng);

}  // namespace mop::examples
