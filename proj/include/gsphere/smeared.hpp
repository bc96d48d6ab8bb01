#pragma once

// Smeared (distributional) verification: both sides of an identity are paired
// against a smooth compactly supported bump and compared as numbers.
//   counting measure:  Delta = A_d S^{d-1} + sum_n r_d(n) 2pi S^{d/2} n^{-nu/2}
//                      J_nu(2pi sqrt(n) S),  nu = d/2 - 1,  A_d = 2, 2pi, 4pi;
//   counting function: N_d = Vol(B^d) S^d + S^{d/2} sum_n r_d(n) n^{-d/4}
//                      J_{d/2}(2pi sqrt(n) S);
//   Fourier side:      int_0^inf (N_3 - (4pi/3)S^3) e^{-i tau S - eps S} dS
//                      = 8pi sum_n r_3(n) / ((tau - i eps)^2 - 4pi^2 n)^2.
// Series tails are estimated by a Richardson triple over n_terms/4, /2, /1;
// the Fourier check additionally carries explicit tail corrections on both
// sides (closed-form damped-oscillation integrals past R_max on the left, a
// mean-density integral with a rigorous sandwich remainder on the right).

#include <complex>
#include <cstdint>
#include <string>

#include "gsphere/bump.hpp"
#include "gsphere/radial_counts.hpp"

namespace gsphere {

struct PairingReport {
    std::complex<double> lhs{0.0, 0.0};
    std::complex<double> rhs{0.0, 0.0};
    std::complex<double> rhs_half{0.0, 0.0};     // rhs truncated at n_terms/2
    std::complex<double> rhs_quarter{0.0, 0.0};  // rhs truncated at n_terms/4
    double truncation_bound = 0.0;   // series tail estimate / bound
    double quadrature_error = 0.0;   // accumulated 32-vs-64 node deltas
    std::int64_t n_terms = 0;
    bool converged = true;           // Richardson triple decayed
    bool pass = false;
    double margin = 0.0;             // allowance minus |lhs - rhs|
    std::string note;
};

// int chi(S) N_{3,k}(S) dS, panels split at lattice radii and bump seams; the
// integrand is piecewise polynomial times the bump, so the panel rule is
// near-exact. k in [0, 4]; requires a d=3 table covering the support.
double pair_counting(const RadialCountTable& table, int k,
                     const BumpFunction& chi);

// Poisson-type identity for the counting measure; dimension from the table.
PairingReport verify_delta_identity(const RadialCountTable& table,
                                    const BumpFunction& chi,
                                    std::int64_t n_terms);

// Integrated Poisson-type identity for the counting function itself.
PairingReport verify_Nd_identity(const RadialCountTable& table,
                                 const BumpFunction& chi, std::int64_t n_terms);

// Regularized Fourier-side identity at frequency tau, damping eps >= 0.05.
// tau within 0.1 of a singular frequency 2pi sqrt(n) is rejected.
PairingReport fourier_check(const RadialCountTable& table, double tau,
                            double epsilon, std::int64_t n_terms, double r_max);

}  // namespace gsphere
