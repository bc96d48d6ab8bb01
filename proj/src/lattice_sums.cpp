#include "gsphere/lattice_sums.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "gsphere/summation.hpp"

namespace gsphere {

namespace {

double prefactor(int j) {
    double mag = (2.0 * j + 4.0) * std::pow(2.0 * std::numbers::pi, -j - 3.0);
    return (j % 4 == 0) ? mag : -mag;
}

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Gamma(s, x) for integer s >= 1: (s-1)! e^{-x} sum_{m<s} x^m / m!.
double upper_gamma_int(int s, double x) {
    double inner = 0.0, term = 1.0;
    for (int m = 0; m < s; ++m) {
        if (m > 0) term *= x / m;
        inner += term;
    }
    return factorial(s - 1) * std::exp(-x) * inner;
}

// Gamma(a, x) for a = 1/2 - m, m >= 0, via the downward recurrence
// Gamma(b-1, x) = (Gamma(b, x) - x^{b-1} e^{-x}) / (b - 1) seeded at
// Gamma(1/2, x) = sqrt(pi) erfc(sqrt(x)).
double upper_gamma_neg_half(double a, double x) {
    double b = 0.5;
    double g = std::sqrt(std::numbers::pi) * std::erfc(std::sqrt(x));
    while (b > a + 0.25) {
        g = (g - std::pow(x, b - 1.0) * std::exp(-x)) / (b - 1.0);
        b -= 1.0;
    }
    return g;
}

const RadialCountTable& shell_table() {
    static const RadialCountTable table = build_table(3, 256);
    return table;
}

}  // namespace

LatticeSumConstant c_constant_direct(const RadialCountTable& table, int j,
                                     std::int64_t n_terms) {
    if (j < 0 || j % 2 != 0)
        throw std::invalid_argument("c_constant_direct: odd index (C_j = 0 identically)");
    if (table.dimension != 3)
        throw std::invalid_argument("c_constant_direct: requires a d=3 table");
    if (n_terms < 1 || n_terms > table.max_n)
        throw std::out_of_range("c_constant_direct: n_terms beyond table range");

    const double s = 2.0 + 0.5 * j;
    NeumaierSum acc;
    for (std::int64_t n = 1; n <= n_terms; ++n) {
        std::int64_t r = table.counts[static_cast<std::size_t>(n)];
        if (r != 0) acc.add(static_cast<double>(r) * std::pow(static_cast<double>(n), -s));
    }
    double pref = prefactor(j);
    double partial = acc.value();
    double fp_budget = static_cast<double>(n_terms) *
                       std::numeric_limits<double>::epsilon() * partial;
    double tail = r3_tail_bound(static_cast<double>(n_terms), s);
    return LatticeSumConstant{j, pref * partial, std::abs(pref) * (tail + fp_budget),
                              "direct"};
}

double epstein_sum_ewald(double s, double precision_target, double split) {
    if (precision_target < 1e-14)
        throw std::invalid_argument("epstein_sum_ewald: target unreachable in double precision");
    if (!(split > 0.0))
        throw std::invalid_argument("epstein_sum_ewald: split must be positive");
    const double t = split;
    const double pi = std::numbers::pi;
    const auto& shells = shell_table();
    const double cut = precision_target / 100.0;

    // Direct half: sum' Gamma(s, t|v|^2) |v|^{-2s}.
    NeumaierSum direct;
    for (std::int64_t n = 1; n <= shells.max_n; ++n) {
        std::int64_t r = shells.counts[static_cast<std::size_t>(n)];
        if (r == 0) continue;
        double term = static_cast<double>(r) *
                      upper_gamma_int(static_cast<int>(s), t * n) *
                      std::pow(static_cast<double>(n), -s);
        direct.add(term);
        if (std::abs(term) < cut && n > 16) break;
    }
    // Dual half from Poisson summation of the Gaussian cutoff:
    // pi^{3/2} sum'_w (pi^2 |w|^2)^{s-3/2} Gamma(3/2 - s, pi^2 |w|^2 / t).
    NeumaierSum dual;
    for (std::int64_t n = 1; n <= shells.max_n; ++n) {
        std::int64_t r = shells.counts[static_cast<std::size_t>(n)];
        if (r == 0) continue;
        double b = pi * pi * static_cast<double>(n);
        double term = static_cast<double>(r) * std::pow(b, s - 1.5) *
                      upper_gamma_neg_half(1.5 - s, b / t);
        dual.add(term);
        if (std::abs(term) < cut && n > 4) break;
    }
    double zero_mode = std::pow(pi, 1.5) * std::pow(t, s - 1.5) / (s - 1.5);
    double self = std::pow(t, s) / s;
    return (direct.value() + zero_mode - self + std::pow(pi, 1.5) * dual.value()) /
           std::tgamma(s);
}

LatticeSumConstant c_constant_ewald(int j, double precision_target, double split) {
    if (j < 0 || j % 2 != 0)
        throw std::invalid_argument("c_constant_ewald: odd index (C_j = 0 identically)");
    if (precision_target < 1e-12)
        throw std::invalid_argument("c_constant_ewald: precision_target must be >= 1e-12");
    const double s = 2.0 + 0.5 * j;
    double sum = epstein_sum_ewald(s, precision_target, split);
    return LatticeSumConstant{j, prefactor(j) * sum, precision_target, "ewald"};
}

bool c_consistency_check(int j) {
    if (j < 0) return false;
    if (j % 2 != 0) return true;  // both conventions give exactly zero
    // Magnitudes: 2j+4 versus 2(j+2), identical as integers.
    if (2 * j + 4 != 2 * (j + 2)) return false;
    // Signs: case split (+ for j = 0 mod 4, - for j = 2 mod 4) versus (-1)^{j/2}.
    int case_sign = (j % 4 == 0) ? 1 : -1;
    int parity_sign = ((j / 2) % 2 == 0) ? 1 : -1;
    return case_sign == parity_sign;
}

}  // namespace gsphere
