#pragma once

// The oscillatory remainder
//   o_k(S) = -(1/pi) sum_n (r_3(n)/n) (2pi sqrt(n))^{-k}
//            [ a_k S cos z + b_k S sin z + (g_k cos z + d_k sin z)/(2pi sqrt n) ],
// z = 2pi sqrt(n) S, with (a, b, g, d) the exact quadruple of order k, and the
// full main formula
//   N_{3,k}(S) = (8pi/(3+k)!) S^{3+k} + sum_{m<k} C_{k-1-m} S^m / m! + o_k(S).
// Absolutely convergent for k >= 2 (terms decay like r_3(n) n^{-1-k/2}); every
// value ships with a rigorous truncation-tail plus floating-point bound.
//
// BetaConvention exists because the commonly quoted closed form for the S sin
// coefficient, b_k = -Im[i^k], contradicts the recursion that defines the
// quadruples (which gives b_1 = +1, confirmed by direct integration). The
// recursion is authoritative; the printed variant is kept only so tests can
// demonstrate the discrepancy.

#include <cstdint>
#include <string>

#include "gsphere/radial_counts.hpp"

namespace gsphere {

struct BoundedValue {
    double value = 0.0;
    double bound = 0.0;  // rigorous: |value - truth| <= bound
    std::int64_t terms_used = 0;
};

enum class BetaConvention { recursion, printed };

// Partial sum over n <= n_terms. Requires k >= 2 (absolute convergence) and a
// d=3 table covering n_terms. bound = analytic tail + floating budget.
BoundedValue eval_ok(const RadialCountTable& table, int k, double sigma,
                     std::int64_t n_terms,
                     BetaConvention convention = BetaConvention::recursion,
                     unsigned threads = 1);

// 8 pi / (3+k)!; defined for all k >= 0 (k=0 gives 4pi/3, k=1 gives pi/3).
double main_coefficient(int k);

// Full main formula; the constants C_j come from the Ewald route (cached) and
// their certified bounds are propagated into the result bound.
BoundedValue main_formula(const RadialCountTable& table, int k, double sigma,
                          std::int64_t n_terms, unsigned threads = 1);

}  // namespace gsphere
