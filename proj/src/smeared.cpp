#include "gsphere/smeared.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "gsphere/bessel.hpp"
#include "gsphere/quadrature.hpp"
#include "gsphere/step_calculus.hpp"
#include "gsphere/summation.hpp"

namespace gsphere {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfDiag = 0.8660254037844386;  // sqrt(3)/2

double surface_coeff(int d) {  // A_d = |S^{d-1}|
    switch (d) {
        case 1: return 2.0;
        case 2: return 2.0 * kPi;
        default: return 4.0 * kPi;
    }
}

double ball_volume(int d) {
    switch (d) {
        case 1: return 2.0;
        case 2: return kPi;
        default: return 4.0 * kPi / 3.0;
    }
}

std::vector<double> radii_inside(double a, double b) {
    std::vector<double> out;
    auto lo = static_cast<std::int64_t>(std::max(0.0, a * a));
    auto hi = static_cast<std::int64_t>(b * b) + 2;
    for (std::int64_t n = std::max<std::int64_t>(1, lo); n <= hi; ++n) {
        double r = std::sqrt(static_cast<double>(n));
        if (r > a && r < b) out.push_back(r);
    }
    return out;
}

std::vector<double> merged_breakpoints(const BumpFunction& chi) {
    std::vector<double> pts = chi.breakpoints();
    std::vector<double> radii = radii_inside(chi.a, chi.b);
    pts.insert(pts.end(), radii.begin(), radii.end());
    return pts;
}

// int chi(S) N_d(S) dS from the cumulative table (piecewise constant between
// lattice radii; panels are split there).
QuadratureResult smear_count(const RadialCountTable& table, const BumpFunction& chi) {
    auto f = [&](double s) {
        auto n = static_cast<std::int64_t>(s * s);
        return chi(s) * static_cast<double>(table.cumulative[static_cast<std::size_t>(n)]);
    };
    return integrate_panels(f, chi.a, chi.b, merged_breakpoints(chi));
}

struct SeriesTriple {
    double s1 = 0.0, s2 = 0.0, s3 = 0.0;  // partial sums at N/4, N/2, N
    double quad_error = 0.0;
};

// Richardson-style convergence assessment of a partial-sum triple.
void assess_triple(const SeriesTriple& t, double scale, PairingReport& report) {
    double d1 = t.s2 - t.s1, d2 = t.s3 - t.s2;
    report.converged = std::abs(d2) <= std::abs(d1) + 1e-14 * scale;
    double extrap = 0.0;
    if (report.converged && d1 != d2)
        extrap = std::abs(d2 * d2 / (d1 - d2));  // Aitken tail estimate
    report.truncation_bound = 2.0 * std::abs(d2) + extrap;
}

void finish_report(PairingReport& report) {
    double scale = std::max({std::abs(report.lhs), std::abs(report.rhs), 1.0});
    double allowance =
        report.truncation_bound + report.quadrature_error + 1e-8 * scale;
    double gap = std::abs(report.lhs - report.rhs);
    report.margin = allowance - gap;
    report.pass = report.converged && gap <= allowance;
    if (!report.converged) report.note = "non-convergent Richardson triple";
}

}  // namespace

double pair_counting(const RadialCountTable& table, int k, const BumpFunction& chi) {
    if (k < 0 || k > 4)
        throw std::invalid_argument("pair_counting: k must lie in [0, 4]");
    if (table.dimension != 3)
        throw std::invalid_argument("pair_counting: requires a d=3 table");
    if (chi.b * chi.b > static_cast<double>(table.max_n))
        throw std::out_of_range("pair_counting: bump support exceeds table range");
    IteratedEvaluator eval(table);
    auto f = [&](double s) { return chi(s) * eval.eval_real(k, s); };
    return integrate_panels(f, chi.a, chi.b, merged_breakpoints(chi)).value;
}

PairingReport verify_delta_identity(const RadialCountTable& table,
                                    const BumpFunction& chi,
                                    std::int64_t n_terms) {
    const int d = table.dimension;
    if (chi.b * chi.b > static_cast<double>(table.max_n) ||
        n_terms > table.max_n || n_terms < 4)
        throw std::out_of_range("verify_delta_identity: range/terms beyond table");

    PairingReport report;
    report.n_terms = n_terms;

    NeumaierSum lhs;
    for (double r : radii_inside(chi.a, chi.b)) {
        auto n = static_cast<std::int64_t>(std::llround(r * r));
        lhs.add(static_cast<double>(table.counts[static_cast<std::size_t>(n)]) * chi(r));
    }
    report.lhs = lhs.value();

    const double nu = 0.5 * d - 1.0;
    const std::vector<double> seams = chi.breakpoints();
    SeriesTriple triple;
    NeumaierSum series;
    for (std::int64_t n = 1; n <= n_terms; ++n) {
        std::int64_t r = table.counts[static_cast<std::size_t>(n)];
        if (r != 0) {
            double w = 2.0 * kPi * std::sqrt(static_cast<double>(n));
            double amp = 2.0 * kPi * std::pow(static_cast<double>(n), -0.5 * nu);
            auto f = [&](double s) {
                return chi(s) * amp * std::pow(s, 0.5 * d) * bessel_order(nu, w * s);
            };
            QuadratureResult q = integrate_panels(f, chi.a, chi.b, seams, w);
            series.add(static_cast<double>(r) * q.value);
            triple.quad_error += static_cast<double>(r) * q.error;
        }
        if (n == n_terms / 4) triple.s1 = series.value();
        if (n == n_terms / 2) triple.s2 = series.value();
    }
    triple.s3 = series.value();

    QuadratureResult area =
        integrate_panels([&](double s) { return chi(s) * std::pow(s, d - 1); },
                         chi.a, chi.b, seams);
    report.rhs = surface_coeff(d) * area.value + triple.s3;
    report.rhs_half = surface_coeff(d) * area.value + triple.s2;
    report.rhs_quarter = surface_coeff(d) * area.value + triple.s1;
    report.quadrature_error =
        triple.quad_error + surface_coeff(d) * area.error;
    assess_triple(triple, std::max(std::abs(report.lhs), 1.0), report);
    finish_report(report);
    return report;
}

PairingReport verify_Nd_identity(const RadialCountTable& table,
                                 const BumpFunction& chi, std::int64_t n_terms) {
    const int d = table.dimension;
    if (chi.b * chi.b > static_cast<double>(table.max_n) ||
        n_terms > table.max_n || n_terms < 4)
        throw std::out_of_range("verify_Nd_identity: range/terms beyond table");

    PairingReport report;
    report.n_terms = n_terms;

    QuadratureResult lhs = smear_count(table, chi);
    report.lhs = lhs.value;

    const std::vector<double> seams = chi.breakpoints();
    SeriesTriple triple;
    NeumaierSum series;
    for (std::int64_t n = 1; n <= n_terms; ++n) {
        std::int64_t r = table.counts[static_cast<std::size_t>(n)];
        if (r != 0) {
            double w = 2.0 * kPi * std::sqrt(static_cast<double>(n));
            double amp =
                static_cast<double>(r) * std::pow(static_cast<double>(n), -0.25 * d);
            auto f = [&](double s) {
                return chi(s) * std::pow(s, 0.5 * d) * bessel_order(0.5 * d, w * s);
            };
            QuadratureResult q = integrate_panels(f, chi.a, chi.b, seams, w);
            series.add(amp * q.value);
            triple.quad_error += std::abs(amp) * q.error;
        }
        if (n == n_terms / 4) triple.s1 = series.value();
        if (n == n_terms / 2) triple.s2 = series.value();
    }
    triple.s3 = series.value();

    QuadratureResult vol =
        integrate_panels([&](double s) { return chi(s) * std::pow(s, d); },
                         chi.a, chi.b, seams);
    report.rhs = ball_volume(d) * vol.value + triple.s3;
    report.rhs_half = ball_volume(d) * vol.value + triple.s2;
    report.rhs_quarter = ball_volume(d) * vol.value + triple.s1;
    report.quadrature_error =
        lhs.error + triple.quad_error + ball_volume(d) * vol.error;
    assess_triple(triple, std::max(std::abs(report.lhs), 1.0), report);
    finish_report(report);
    return report;
}

PairingReport fourier_check(const RadialCountTable& table, double tau,
                            double epsilon, std::int64_t n_terms, double r_max) {
    using C = std::complex<double>;
    if (table.dimension != 3)
        throw std::invalid_argument("fourier_check: requires a d=3 table");
    if (epsilon < 0.05)
        throw std::invalid_argument("fourier_check: epsilon must be >= 0.05");
    if (n_terms < 4 || n_terms > table.max_n ||
        r_max * r_max > static_cast<double>(table.max_n))
        throw std::out_of_range("fourier_check: terms/range beyond table");
    // Reject tau near the singular support 2*pi*sqrt(N).
    auto near = static_cast<std::int64_t>(std::llround(
        (tau / (2.0 * kPi)) * (tau / (2.0 * kPi))));
    for (std::int64_t n = std::max<std::int64_t>(1, near - 2); n <= near + 2; ++n)
        if (std::abs(std::abs(tau) - 2.0 * kPi * std::sqrt(static_cast<double>(n))) < 0.1)
            throw std::invalid_argument("fourier_check: singular-support proximity");

    PairingReport report;
    report.n_terms = n_terms;
    const C s(epsilon, tau);
    const double vol = 4.0 * kPi / 3.0;

    // Left side: quadrature on (0, R) split at lattice radii, plus the
    // closed-form tail of the Abel-summable trigonometric expansion of
    // N_3 - (4pi/3)S^3 on (R, inf).
    std::vector<double> radii;
    for (std::int64_t n = 1; n <= static_cast<std::int64_t>(r_max * r_max); ++n)
        radii.push_back(std::sqrt(static_cast<double>(n)));
    auto f = [&](double x) -> C {
        auto n = static_cast<std::int64_t>(x * x);
        double step = static_cast<double>(table.cumulative[static_cast<std::size_t>(n)]);
        return (step - vol * x * x * x) * std::exp(-s * x);
    };
    ComplexQuadratureResult quad =
        integrate_panels_complex(f, 0.0, r_max, radii, std::abs(tau) + epsilon);

    C tail{0.0, 0.0}, tail_half{0.0, 0.0}, tail_quarter{0.0, 0.0};
    for (std::int64_t n = 1; n <= n_terms; ++n) {
        std::int64_t r = table.counts[static_cast<std::size_t>(n)];
        if (r != 0) {
            double w = 2.0 * kPi * std::sqrt(static_cast<double>(n));
            C zm = s - C(0.0, w), zp = s + C(0.0, w);
            C em = std::exp(-zm * r_max), ep = std::exp(-zp * r_max);
            C ic = 0.5 * (em * (r_max / zm + 1.0 / (zm * zm)) +
                          ep * (r_max / zp + 1.0 / (zp * zp)));
            C is = (em / zm - ep / zp) / C(0.0, 2.0);
            tail += -(static_cast<double>(r) / (kPi * n)) * (ic - is / w);
        }
        if (n == n_terms / 4) tail_quarter = tail;
        if (n == n_terms / 2) tail_half = tail;
    }
    double tail_estimate =
        std::abs(tail - tail_half) + std::abs(tail_half - tail_quarter);
    report.lhs = quad.value + tail;

    // Right side: partial sum plus the mean-density integral of the tail,
    //   sum_{n>N} r_3(n) g(n) ~ int_N^inf 2 pi sqrt(x) g(x) dx,
    // with a rigorous remainder from the cube-covering sandwich.
    const C a = (C(tau, -epsilon)) * (C(tau, -epsilon));
    NeumaierSum sum_re, sum_im;
    for (std::int64_t n = 1; n <= n_terms; ++n) {
        std::int64_t r = table.counts[static_cast<std::size_t>(n)];
        if (r == 0) continue;
        C den = a - 4.0 * kPi * kPi * static_cast<double>(n);
        C term = 8.0 * kPi * static_cast<double>(r) / (den * den);
        sum_re.add(term.real());
        sum_im.add(term.imag());
    }
    const double nd = static_cast<double>(n_terms);
    ComplexQuadratureResult density = integrate_panels_complex(
        [&](double t) -> C {
            C den = a * t * t - 4.0 * kPi * kPi * nd;
            return 1.0 / (den * den);
        },
        0.0, 1.0, {0.25, 0.5, 0.75});
    C correction = 32.0 * kPi * kPi * std::pow(nd, 1.5) * density.value;
    report.rhs = C(sum_re.value(), sum_im.value()) + correction;
    report.rhs_half = report.rhs;
    report.rhs_quarter = report.rhs;

    auto envelope = [&](double x) {
        double rt = std::sqrt(x);
        return vol * (std::pow(rt + kHalfDiag, 3.0) - x * rt);
    };
    double amag = std::abs(a);
    double g_n = 8.0 * kPi / std::pow(4.0 * kPi * kPi * nd - amag, 2.0);
    QuadratureResult remainder = integrate_panels(
        [&](double t) {
            double x = nd / (t * t);
            double gp = 64.0 * std::pow(kPi, 3.0) /
                        std::pow(4.0 * kPi * kPi * x - amag, 3.0);
            return envelope(x) * gp * 2.0 * nd / (t * t * t);
        },
        1e-9, 1.0, {0.25, 0.5, 0.75});
    double rhs_tail_bound = envelope(nd) * g_n + remainder.value + remainder.error;

    report.truncation_bound = tail_estimate + rhs_tail_bound;
    report.quadrature_error = quad.error +
                              32.0 * kPi * kPi * std::pow(nd, 1.5) * density.error;
    finish_report(report);
    return report;
}

}  // namespace gsphere
