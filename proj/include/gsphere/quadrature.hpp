#pragma once

// Panelized Gauss-Legendre quadrature for piecewise-analytic integrands with
// known breakpoints (lattice radii sqrt(n), bump sub-support seams). Each
// panel is evaluated with 32 and 64 nodes; the 64-node value is kept and the
// difference feeds the error estimate. Oscillatory integrands declare their
// top angular frequency and panels are subdivided to at most ~4 cycles each.

#include <complex>
#include <functional>
#include <vector>

namespace gsphere {

// Nodes/weights for the n-point rule on [-1, 1]; n in {32, 64}. Computed once
// by Newton iteration on the Legendre recurrence, then cached.
const std::vector<double>& gl_nodes(int n);
const std::vector<double>& gl_weights(int n);

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;  // sum over panels of |64-node - 32-node|
};

struct ComplexQuadratureResult {
    std::complex<double> value{0.0, 0.0};
    double error = 0.0;
};

// Integrates f over [a, b], splitting at the supplied breakpoints (those
// outside (a, b) are ignored). max_frequency > 0 caps panel width at four
// cycles of the fastest oscillation, 8*pi / max_frequency.
QuadratureResult integrate_panels(const std::function<double(double)>& f,
                                  double a, double b,
                                  const std::vector<double>& breakpoints = {},
                                  double max_frequency = 0.0);

ComplexQuadratureResult integrate_panels_complex(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    const std::vector<double>& breakpoints = {}, double max_frequency = 0.0);

}  // namespace gsphere
