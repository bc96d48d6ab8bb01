#include "gsphere/bessel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gsphere/summation.hpp"

namespace gsphere {

namespace {

// The ascending series cancels like e^z * eps (~1e-11 at z = 14) while the
// 16-term Hankel tail is already ~1e-12 there, so the seam sits at 14.
constexpr double kSeriesCutoff = 14.0;

// Ascending series J_nu(z) = sum_m (-1)^m (z/2)^{2m+nu} / (m! (m+nu)!),
// integer nu, 60 terms, compensated.
double integer_series(int nu, double z) {
    double half = 0.5 * z;
    double term = 1.0;
    for (int i = 1; i <= nu; ++i) term *= half / i;  // (z/2)^nu / nu!
    NeumaierSum acc;
    acc.add(term);
    double z2 = -half * half;
    for (int m = 1; m <= 60; ++m) {
        term *= z2 / (static_cast<double>(m) * (m + nu));
        acc.add(term);
    }
    return acc.value();
}

// Hankel expansion: J_nu(z) ~ sqrt(2/(pi z)) [P cos(chi) - Q sin(chi)],
// chi = z - (nu/2 + 1/4) pi, with 16 terms of the asymptotic series.
double integer_asymptotic(int nu, double z) {
    double mu = 4.0 * nu * nu;
    double p = 1.0, q = 0.0;
    double term = 1.0;
    for (int k = 1; k <= 16; ++k) {
        double f = (mu - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (8.0 * k * z);
        term *= f;
        if (k % 2 == 1)
            q += (k % 4 == 1) ? term : -term;
        else
            p += (k % 4 == 2) ? -term : term;
        if (k >= 16) break;
    }
    double chi = z - (0.5 * nu + 0.25) * std::numbers::pi;
    return std::sqrt(2.0 / (std::numbers::pi * z)) * (p * std::cos(chi) - q * std::sin(chi));
}

double integer_bessel(int nu, double z) {
    if (z < 0.0) throw std::invalid_argument("bessel: z must be >= 0");
    if (z == 0.0) return nu == 0 ? 1.0 : 0.0;
    return z <= kSeriesCutoff ? integer_series(nu, z) : integer_asymptotic(nu, z);
}

}  // namespace

double bessel_half(int two_nu, double z) {
    if (z <= 0.0) throw std::invalid_argument("bessel_half: z must be > 0");
    double pref = std::sqrt(2.0 / (std::numbers::pi * z));
    double s = std::sin(z), c = std::cos(z);
    switch (two_nu) {
        case 1: return pref * s;
        case 3: return pref * (s / z - c);
        case 5: {
            double j12 = pref * s;
            double j32 = pref * (s / z - c);
            return (3.0 / z) * j32 - j12;
        }
        default:
            throw std::invalid_argument("bessel_half: two_nu must be 1, 3, or 5");
    }
}

double bessel_minus_half(double z) {
    if (z <= 0.0) throw std::invalid_argument("bessel_minus_half: z must be > 0");
    return std::sqrt(2.0 / (std::numbers::pi * z)) * std::cos(z);
}

double bessel_J0(double z) { return integer_bessel(0, z); }
double bessel_J1(double z) { return integer_bessel(1, z); }

double bessel_order(double nu, double z) {
    if (nu == 0.0) return bessel_J0(z);
    if (nu == 1.0) return bessel_J1(z);
    if (nu == -0.5) return bessel_minus_half(z);
    if (nu == 0.5) return bessel_half(1, z);
    if (nu == 1.5) return bessel_half(3, z);
    if (nu == 2.5) return bessel_half(5, z);
    throw std::invalid_argument("bessel_order: unsupported order");
}

}  // namespace gsphere
