#include <doctest.h>

#include <cmath>
#include <random>

#include "gsphere/step_calculus.hpp"

using namespace gsphere;

TEST_SUITE("step_calculus") {

TEST_CASE("k = 0 agrees with the counting function") {
    RadialCountTable t = build_table(3, 100);
    IteratedEvaluator eval(t);
    for (std::int64_t n = 0; n <= 100; n += 7) {
        SqrtRadius s = SqrtRadius::from_sigma2(n, 1);
        CHECK(eval.eval_exact(0, s) == static_cast<double>(count_N(t, s)));
    }
}

TEST_CASE("hand-derived anchor values") {
    RadialCountTable t = build_table(3, 16);
    IteratedEvaluator eval(t);
    // Sigma = 1: only the origin shell has Sigma - sqrt(n) > 0.
    CHECK(eval.eval_exact(1, SqrtRadius::from_sigma2(1, 1)) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(eval.eval_exact(4, SqrtRadius::from_sigma2(1, 1)) ==
          doctest::Approx(1.0 / 24.0).epsilon(1e-15));
    // Sigma = 1/2: (1/2)^2 / 2! = 1/8.
    CHECK(eval.eval_exact(2, SqrtRadius::from_sigma2(1, 4)) ==
          doctest::Approx(0.125).epsilon(1e-15));
    // Sigma = 2, k = 1: sum r_3(n)(2 - sqrt(n)) over n <= 4.
    double expect = 1.0 * 2.0 + 6.0 * 1.0 + 12.0 * (2.0 - std::sqrt(2.0)) +
                    8.0 * (2.0 - std::sqrt(3.0)) + 6.0 * 0.0;
    CHECK(eval.eval_exact(1, SqrtRadius::from_sigma2(4, 1)) ==
          doctest::Approx(expect).epsilon(1e-14));
}

TEST_CASE("vanishing at the origin for k >= 1") {
    RadialCountTable t = build_table(3, 4);
    IteratedEvaluator eval(t);
    for (int k = 1; k <= 4; ++k)
        CHECK(eval.eval_exact(k, SqrtRadius::from_sigma2(0, 1)) == 0.0);
    CHECK(eval.eval_exact(0, SqrtRadius::from_sigma2(0, 1)) == 1.0);
}

TEST_CASE("closed form equals the spline integrator oracle") {
    RadialCountTable t = build_table(3, 450);
    IteratedEvaluator eval(t);
    std::mt19937 rng(7u);
    std::uniform_int_distribution<std::int64_t> den_dist(1, 32);
    for (int trial = 0; trial < 20; ++trial) {
        std::int64_t den = den_dist(rng);
        std::uniform_int_distribution<std::int64_t> num_dist(1, 400 * den);
        SqrtRadius s = SqrtRadius::from_sigma2(num_dist(rng), den);
        int k = 1 + trial % 4;
        double exact = eval.eval_exact(k, s);
        double tol = 1e-8 * (1.0 + std::abs(exact));
        CAPTURE(s.to_string());
        CAPTURE(k);
        CHECK(std::abs(exact - eval.eval_quadrature(k, s, tol)) <= tol);
    }
}

TEST_CASE("monotone in the radius") {
    RadialCountTable t = build_table(3, 120);
    IteratedEvaluator eval(t);
    for (int k = 0; k <= 3; ++k) {
        double prev = -1.0;
        for (std::int64_t j = 1; j <= 480; j += 7) {
            double v = eval.eval_exact(k, SqrtRadius::from_sigma2(j, 4));
            CHECK(v >= prev);
            prev = v;
        }
    }
}

TEST_CASE("continuous across shell boundaries for k >= 1") {
    RadialCountTable t = build_table(3, 12);
    IteratedEvaluator eval(t);
    for (std::int64_t n : {1, 2, 3, 4, 5, 8}) {
        SqrtRadius lo = SqrtRadius::from_sigma2(n * 1000000 - 1, 1000000);
        SqrtRadius hi = SqrtRadius::from_sigma2(n * 1000000 + 1, 1000000);
        // Lipschitz bound: d/dS N_{3,k} = N_{3,k-1} <= N_3(S) for k >= 1.
        double lip = static_cast<double>(count_N(t, hi)) * (hi.sigma() - lo.sigma());
        for (int k = 1; k <= 3; ++k) {
            double below = eval.eval_exact(k, lo);
            double above = eval.eval_exact(k, hi);
            CHECK(std::abs(above - below) <= 1.01 * lip + 1e-12);
        }
    }
}

TEST_CASE("eval_real agrees with eval_exact away from shells") {
    RadialCountTable t = build_table(3, 120);
    IteratedEvaluator eval(t);
    for (std::int64_t j = 1; j <= 110; j += 3) {
        SqrtRadius s = SqrtRadius::from_sigma2(2 * j + 1, 2);  // never an integer
        for (int k = 0; k <= 4; ++k) {
            double a = eval.eval_exact(k, s);
            double b = eval.eval_real(k, s.sigma());
            CHECK(std::abs(a - b) <= 1e-11 * (1.0 + std::abs(a)));
        }
    }
}

TEST_CASE("input validation") {
    RadialCountTable t = build_table(3, 10);
    IteratedEvaluator eval(t);
    CHECK_THROWS(eval.eval_exact(17, SqrtRadius::from_sigma2(1, 1)));
    CHECK_THROWS(eval.eval_exact(1, SqrtRadius::from_sigma2(11, 1)));
    CHECK_THROWS(eval.eval_quadrature(0, SqrtRadius::from_sigma2(1, 1)));
    CHECK_THROWS(eval.eval_quadrature(5, SqrtRadius::from_sigma2(1, 1)));
    RadialCountTable t2 = build_table(2, 10);
    CHECK_THROWS(IteratedEvaluator{t2});
}

}  // TEST_SUITE
