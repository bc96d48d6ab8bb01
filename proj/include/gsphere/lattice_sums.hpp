#pragma once

// The lattice-sum constants
//   C_j = (2j+4) (2pi)^{-j-3} (-1)^{j/2} sum_{n>=1} r_3(n) n^{-2-j/2}
// for even j (odd j vanish identically). Two routes: a direct partial sum
// with a rigorous Abel tail interval, and an Ewald-accelerated evaluation of
// the underlying Epstein-type sum S(s) = sum'_{v in Z^3} |v|^{-2s}, s = 2+j/2,
// via the incomplete-gamma/theta split at a Gaussian cutoff.

#include <cstdint>
#include <string>

#include "gsphere/radial_counts.hpp"

namespace gsphere {

struct LatticeSumConstant {
    int j = 0;
    double value = 0.0;
    double bound = 0.0;  // rigorous half-width of the certified interval
    std::string method;  // "direct" or "ewald"
};

// Partial sum over n <= n_terms; bound = |prefactor| * Tail(n_terms, 2+j/2)
// plus the floating budget. Rejects odd j. Requires a d=3 table covering
// n_terms.
LatticeSumConstant c_constant_direct(const RadialCountTable& table, int j,
                                     std::int64_t n_terms);

// Ewald split of S(s) with splitting parameter t (both half-sums converge
// like exp(-t n) resp. exp(-pi^2 n / t); t = 1 balances them). Rejects
// targets below 1e-12 (or 1e-14 outright: unreachable in double).
LatticeSumConstant c_constant_ewald(int j, double precision_target,
                                    double split = 1.0);

// The raw Epstein-type sum S(s) = sum'_{v} |v|^{-2s} by the same Ewald split.
double epstein_sum_ewald(double s, double precision_target, double split = 1.0);

// Checks that the two printed prefactor conventions,
// (2j+4)(2pi)^{-j-3} with a sign case split on j mod 4 versus
// 2(j+2)(2pi)^{-j-3}(-1)^{j/2}, agree identically.
bool c_consistency_check(int j);

}  // namespace gsphere
