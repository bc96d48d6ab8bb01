#pragma once

// Bessel functions of the first kind, restricted to the orders this project
// needs: half-integer orders via their trigonometric closed forms
//   J_{1/2}(z) = sqrt(2/(pi z)) sin z,
//   J_{3/2}(z) = sqrt(2/(pi z)) (sin(z)/z - cos z),
//   J_{5/2}   via the upward recurrence J_{v+1} = (2v/z) J_v - J_{v-1},
// and integer orders J_0, J_1 by ascending power series (z <= 25) joined to
// the Hankel asymptotic expansion (z > 25).

namespace gsphere {

// two_nu in {1, 3, 5}; z > 0 required (all call sites have z = 2pi sqrt(n) S
// with n >= 1, S > 0).
double bessel_half(int two_nu, double z);

double bessel_J0(double z);
double bessel_J1(double z);

// J_{-1/2}(z) = sqrt(2/(pi z)) cos z; used by the d=1 shell-measure identity.
double bessel_minus_half(double z);

// J_nu(2 pi sqrt(n) Sigma) for nu = d/2 - 1 and nu = d/2, dispatching on the
// dimension; convenience for the smeared identities.
double bessel_order(double nu, double z);

}  // namespace gsphere
