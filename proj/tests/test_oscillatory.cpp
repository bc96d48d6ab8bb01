#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gsphere/lattice_sums.hpp"
#include "gsphere/oscillatory.hpp"
#include "gsphere/step_calculus.hpp"

using namespace gsphere;

TEST_SUITE("oscillatory") {

TEST_CASE("leading coefficients") {
    const double pi = std::numbers::pi;
    CHECK(main_coefficient(0) == doctest::Approx(4.0 * pi / 3.0).epsilon(1e-16));
    CHECK(main_coefficient(1) == doctest::Approx(pi / 3.0).epsilon(1e-16));
    CHECK(main_coefficient(4) == doctest::Approx(pi / 630.0).epsilon(1e-16));
}

TEST_CASE("k < 2 rejected") {
    RadialCountTable t = build_table(3, 100);
    CHECK_THROWS(eval_ok(t, 1, 1.0, 100));
    CHECK_THROWS(eval_ok(t, 0, 1.0, 100));
}

TEST_CASE("bound is monotone nonincreasing in the term count") {
    RadialCountTable t = build_table(3, 20000);
    for (int k : {2, 3, 4}) {
        double b1 = eval_ok(t, k, 3.0, 5000).bound;
        double b2 = eval_ok(t, k, 3.0, 10000).bound;
        double b3 = eval_ok(t, k, 3.0, 20000).bound;
        CHECK(b2 <= b1);
        CHECK(b3 <= b2);
    }
}

TEST_CASE("o_k(0) vanishes for even k and equals -C_{k-1} for odd k") {
    RadialCountTable t = build_table(3, 20000);
    CHECK(eval_ok(t, 4, 0.0, 20000).value == 0.0);
    CHECK(eval_ok(t, 2, 0.0, 20000).value == 0.0);
    BoundedValue o3 = eval_ok(t, 3, 0.0, 20000);
    LatticeSumConstant c2 = c_constant_ewald(2, 1e-10);
    CHECK(std::abs(o3.value + c2.value) <= o3.bound + c2.bound);
}

TEST_CASE("main formula reproduces exact values within its bound") {
    RadialCountTable t = build_table(3, 20000);
    IteratedEvaluator eval(t);
    for (int k : {2, 3, 4, 5}) {
        for (std::int64_t num : {9, 25, 81, 200, 555}) {
            SqrtRadius s = SqrtRadius::from_sigma2(num, 4);
            double exact = eval.eval_exact(k, s);
            BoundedValue mf = main_formula(t, k, s.sigma(), 20000);
            CAPTURE(k);
            CAPTURE(num);
            CHECK(std::abs(mf.value - exact) <=
                  mf.bound + 1e-13 * (1.0 + std::abs(exact)));
        }
    }
}

TEST_CASE("printed beta convention differs exactly at odd k") {
    RadialCountTable t = build_table(3, 4000);
    BoundedValue rec2 = eval_ok(t, 2, 1.7, 4000);
    BoundedValue prt2 = eval_ok(t, 2, 1.7, 4000, BetaConvention::printed);
    CHECK(rec2.value == prt2.value);  // beta_2 = 0 either way
    BoundedValue rec3 = eval_ok(t, 3, 1.7, 4000);
    BoundedValue prt3 = eval_ok(t, 3, 1.7, 4000, BetaConvention::printed);
    CHECK(std::abs(rec3.value - prt3.value) > 10.0 * rec3.bound);
}

TEST_CASE("deterministic under threading") {
    RadialCountTable t = build_table(3, 8000);
    BoundedValue a = eval_ok(t, 3, 2.3, 8000, BetaConvention::recursion, 1);
    BoundedValue b = eval_ok(t, 3, 2.3, 8000, BetaConvention::recursion, 4);
    CHECK(a.value == b.value);
    CHECK(a.bound == b.bound);
}

}  // TEST_SUITE
