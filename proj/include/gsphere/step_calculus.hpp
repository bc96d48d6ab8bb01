#pragma once

// Iterated integrals of the d=3 counting function,
//   N_{3,k}(Sigma) = k-fold integral of N_3 from 0.
// N_3 is a step function with jumps r_3(n) at sqrt(n), so repeated
// integration collapses to the finite sum
//   N_{3,k}(Sigma) = sum_{n <= Sigma^2} r_3(n) (Sigma - sqrt(n))^k / k!.
// An independent piecewise-polynomial integrator (eval_quadrature) guards the
// derivation: it never uses the closed form, only repeated antidifferentiation
// of the spline between consecutive shell radii.
//
// Pure functions over an immutable table; safe for concurrent callers.

#include <cstdint>
#include <vector>

#include "gsphere/radial_counts.hpp"
#include "gsphere/sqrt_radius.hpp"

namespace gsphere {

class IteratedEvaluator {
public:
    // Table must be the d=3 table.
    explicit IteratedEvaluator(const RadialCountTable& table);

    // Closed-form evaluation; exact up to compensated floating accumulation.
    // k <= 16; k = 0 agrees exactly with count_N.
    double eval_exact(int k, const SqrtRadius& sigma, unsigned threads = 1) const;

    // Same, at an inexact radius. Shell boundaries are resolved by the
    // floating comparison n <= sigma^2; intended for quadrature nodes that
    // are kept away from shell radii.
    double eval_real(int k, double sigma) const;

    // Oracle: k-fold piecewise-exact integration between consecutive
    // breakpoints sqrt(n) (the integrand on each gap is a polynomial of
    // degree k-1, antidifferentiated in closed form). k in [1, 4].
    // Throws if the floating accumulation budget exceeds tol.
    double eval_quadrature(int k, const SqrtRadius& sigma, double tol = 1e-10) const;

    const RadialCountTable& table() const { return *table_; }
    double sqrt_n(std::int64_t n) const { return sqrt_n_[static_cast<std::size_t>(n)]; }

private:
    const RadialCountTable* table_;
    std::vector<double> sqrt_n_;
};

}  // namespace gsphere
