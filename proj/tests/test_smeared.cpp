#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "gsphere/bessel.hpp"
#include "gsphere/bump.hpp"
#include "gsphere/quadrature.hpp"
#include "gsphere/smeared.hpp"
#include "gsphere/step_calculus.hpp"

using namespace gsphere;

namespace {
const double kPi = std::numbers::pi;

double bump_moment(const BumpFunction& chi, int m) {
    return integrate_panels(
               [&](double s) { return chi(s) * std::pow(s - chi.a, m); },
               chi.a, chi.b, chi.breakpoints())
        .value;
}
}  // namespace

TEST_SUITE("smeared") {

TEST_CASE("bump normalization and moment killing") {
    BumpFunction plain = make_bump(0.0, 1.0);
    CHECK(std::abs(bump_moment(plain, 0) - 1.0) < 1e-12);

    BumpFunction killed = make_bump(0.0, 1.0, {1, 2, 3, 4});
    CHECK(std::abs(bump_moment(killed, 0) - 1.0) < 1e-12);
    for (int m = 1; m <= 4; ++m) {
        CAPTURE(m);
        CHECK(std::abs(bump_moment(killed, m)) < 1e-12);
    }
}

TEST_CASE("rescaling preserves integral and killed moments") {
    BumpFunction killed = make_bump(0.0, 1.0, {1, 2});
    BumpFunction moved = killed.rescaled(2.0, 2.25);
    CHECK(std::abs(bump_moment(moved, 0) - 1.0) < 1e-11);
    CHECK(std::abs(bump_moment(moved, 1)) < 1e-12);
    CHECK(std::abs(bump_moment(moved, 2)) < 1e-12);
    CHECK(moved(1.99) == 0.0);
    CHECK(moved(2.26) == 0.0);
    CHECK(moved(2.12) != 0.0);  // signed: killed moments need negative lobes
}

TEST_CASE("bump vanishes outside its support") {
    BumpFunction chi = make_bump(std::sqrt(2.0), std::sqrt(3.0));
    CHECK(chi(std::sqrt(2.0)) == 0.0);
    CHECK(chi(std::sqrt(3.0)) == 0.0);
    CHECK(chi(1.55) > 0.0);
}

TEST_CASE("point-value recovery through pair_counting") {
    RadialCountTable t = build_table(3, 60);
    for (std::int64_t n : {2, 5, 10, 26}) {
        double lo = std::sqrt(static_cast<double>(n));
        double hi = std::sqrt(static_cast<double>(n + 1));
        BumpFunction chi = make_bump(lo + 0.2 * (hi - lo), hi - 0.2 * (hi - lo));
        auto expected = static_cast<double>(t.cumulative[static_cast<std::size_t>(n)]);
        CHECK(std::abs(pair_counting(t, 0, chi) - expected) <= 1e-12 * expected);
    }
    BumpFunction origin = make_bump(0.1, 0.9);
    CHECK(std::abs(pair_counting(t, 0, origin) - 1.0) <= 1e-12);
}

TEST_CASE("pair_counting k = 1 matches pointwise sampling") {
    RadialCountTable t = build_table(3, 10);
    IteratedEvaluator eval(t);
    BumpFunction chi = make_bump(std::sqrt(2.0) + 0.01, std::sqrt(3.0) - 0.01);
    // Between radii N_{3,1} is linear; smearing against a normalized bump
    // must land inside the segment's value range.
    double lo_v = eval.eval_real(1, chi.a), hi_v = eval.eval_real(1, chi.b);
    double v = pair_counting(t, 1, chi);
    CHECK(v >= lo_v - 1e-12);
    CHECK(v <= hi_v + 1e-12);
}

TEST_CASE("d=3 trig form equals the Bessel form termwise") {
    for (std::int64_t n = 1; n <= 100; ++n) {
        for (double sig : {0.7, 1.3, 2.4}) {
            double w = 2.0 * kPi * std::sqrt(static_cast<double>(n));
            double z = w * sig;
            double bessel_form = std::pow(sig, 1.5) *
                                 std::pow(static_cast<double>(n), -0.75) *
                                 bessel_half(3, z);
            double trig_form = (1.0 / (kPi * static_cast<double>(n))) *
                               (std::sin(z) / w - sig * std::cos(z));
            CAPTURE(n);
            CAPTURE(sig);
            CHECK(std::abs(bessel_form - trig_form) <=
                  1e-12 * std::max(1.0, std::abs(trig_form)));
        }
    }
}

TEST_CASE("counting-measure identity, d = 1 (classical Poisson case)") {
    RadialCountTable t = build_table(1, 4000);
    BumpFunction chi = make_bump(0.5, 1.5);
    PairingReport r = verify_delta_identity(t, chi, 4000);
    CHECK(r.pass);
    CHECK(std::abs(r.lhs - std::complex<double>(2.0 * chi(1.0))) < 1e-12);
    CHECK(std::abs(r.lhs - r.rhs) < 1e-6);
}

TEST_CASE("counting-measure identity, d = 3") {
    RadialCountTable t = build_table(3, 4000);
    BumpFunction chi = make_bump(0.5, 1.5);
    PairingReport r = verify_delta_identity(t, chi, 4000);
    CHECK(r.pass);
    // Radii in (0.5, 1.5): sqrt(1) and sqrt(2), with r_3 weights 6 and 12.
    double expect = 6.0 * chi(1.0) + 12.0 * chi(std::sqrt(2.0));
    CHECK(std::abs(r.lhs - std::complex<double>(expect)) < 1e-12);

    BumpFunction empty = make_bump(1.45, 1.7);  // no lattice radius inside
    PairingReport r0 = verify_delta_identity(t, empty, 4000);
    CHECK(r0.lhs == std::complex<double>(0.0));
    CHECK(r0.pass);
}

TEST_CASE("counting-function identity, d = 1, 2, 3") {
    BumpFunction low = make_bump(0.2, 0.8);
    RadialCountTable t1 = build_table(1, 4000);
    PairingReport r1 = verify_Nd_identity(t1, low, 4000);
    CHECK(r1.pass);
    CHECK(std::abs(r1.lhs - std::complex<double>(1.0)) < 1e-10);

    BumpFunction mid = make_bump(0.5, 1.5);
    RadialCountTable t2 = build_table(2, 4000);
    CHECK(verify_Nd_identity(t2, mid, 4000).pass);
    RadialCountTable t3 = build_table(3, 4000);
    CHECK(verify_Nd_identity(t3, mid, 4000).pass);
}

TEST_CASE("moment-killed pairing reproduces the iterated integral at sqrt(n)") {
    RadialCountTable t = build_table(3, 30);
    IteratedEvaluator eval(t);
    BumpFunction base = make_bump(0.0, 1.0, {1, 2, 3, 4});
    for (std::int64_t n : {4, 9, 25}) {
        double lo = std::sqrt(static_cast<double>(n));
        double hi = std::sqrt(static_cast<double>(n + 1));
        BumpFunction chi = base.rescaled(lo, lo + 0.9 * (hi - lo));
        double smeared = pair_counting(t, 1, chi);
        double exact = eval.eval_exact(1, SqrtRadius::from_sigma2(n, 1));
        CAPTURE(n);
        CHECK(std::abs(smeared - exact) <= 1e-9 * std::max(1.0, exact));
    }
}

TEST_CASE("fourier check: reality symmetry and eps dependence") {
    RadialCountTable t = build_table(3, 2000);
    PairingReport plus = fourier_check(t, 1.0, 0.5, 2000, 40.0);
    PairingReport minus = fourier_check(t, -1.0, 0.5, 2000, 40.0);
    CHECK(plus.pass);
    CHECK(minus.pass);
    CHECK(std::abs(plus.lhs - std::conj(minus.lhs)) < 1e-10);
    CHECK(std::abs(plus.rhs - std::conj(minus.rhs)) < 1e-10);

    PairingReport half = fourier_check(t, 1.0, 0.25, 2000, 40.0);
    CHECK(half.pass);
    CHECK(std::abs(half.rhs - plus.rhs) > 1e-4);  // regularization-dependent
}

TEST_CASE("fourier check rejections") {
    RadialCountTable t = build_table(3, 2000);
    CHECK_THROWS(fourier_check(t, 2.0 * kPi, 0.2, 1000, 30.0));
    CHECK_THROWS(fourier_check(t, 1.0, 0.01, 1000, 30.0));
}

}  // TEST_SUITE
