#pragma once

// Smooth compactly supported test functions built from the base bump
//   exp(-(b - a)^2 / ((sigma - a)(b - sigma)))   on (a, b), zero outside.
// A plain bump is normalized to unit integral. Moment killing (orders in
// {1..4}, taken about the left endpoint a so that affine rescaling preserves
// them) is achieved by a linear combination of five sub-bumps on overlapping
// sub-intervals of (a, b); the 5x5 moment system is solved directly, with
// jittered sub-support placement retried if it degenerates.

#include <vector>

namespace gsphere {

struct BumpFunction {
    struct Component {
        double a = 0.0;
        double b = 0.0;
        double coeff = 0.0;
    };

    double a = 0.0;
    double b = 0.0;
    std::vector<Component> components;
    std::vector<int> killed_moments;
    std::vector<double> residual_moments;  // |int chi (s-a)^m|, m = 1..4
    double norm_sup = 0.0;    // sup |chi|
    double norm_d1 = 0.0;     // sup |chi'|
    double norm_d2 = 0.0;     // sup |chi''|

    double operator()(double sigma) const;

    // Affine transport of the support to (new_a, new_b), values scaled so the
    // integral stays 1; killed moments about the left endpoint are preserved.
    BumpFunction rescaled(double new_a, double new_b) const;

    // Sub-support seams, for quadrature panel splitting.
    std::vector<double> breakpoints() const;
};

// b > a >= 0; moments_to_kill a subset of {1,2,3,4}. Normalized to unit
// integral; requested moments vanish to 1e-12. Throws if the moment system
// stays singular after jitter retries.
BumpFunction make_bump(double a, double b,
                       const std::vector<int>& moments_to_kill = {});

}  // namespace gsphere
