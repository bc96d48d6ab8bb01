#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gsphere/lattice_sums.hpp"

using namespace gsphere;

TEST_SUITE("lattice_sums") {

TEST_CASE("prefactor conventions agree") {
    for (int j : {0, 2, 4, 6, 8, 1, 3}) CHECK(c_consistency_check(j));
}

TEST_CASE("odd indices are rejected (the constant is identically zero)") {
    RadialCountTable t = build_table(3, 100);
    CHECK_THROWS(c_constant_direct(t, 1, 100));
    CHECK_THROWS(c_constant_ewald(3, 1e-9));
}

TEST_CASE("epstein sum exceeds its three-shell lower bound") {
    // r_3(1)/1 + r_3(2)/4 + r_3(3)/9 = 6 + 3 + 8/9.
    double s2 = epstein_sum_ewald(2.0, 1e-10);
    CHECK(s2 > 6.0 + 3.0 + 8.0 / 9.0);
}

TEST_CASE("ewald value independent of the splitting parameter") {
    for (double s : {2.0, 3.0, 4.0}) {
        double v1 = epstein_sum_ewald(s, 1e-10, 0.5);
        double v2 = epstein_sum_ewald(s, 1e-10, 1.0);
        double v3 = epstein_sum_ewald(s, 1e-10, 2.0);
        CAPTURE(s);
        CHECK(std::abs(v1 - v2) < 1e-9 * (1.0 + std::abs(v2)));
        CHECK(std::abs(v3 - v2) < 1e-9 * (1.0 + std::abs(v2)));
    }
}

TEST_CASE("cross-method containment") {
    RadialCountTable t = build_table(3, 100000, 2);
    for (int j : {0, 2, 4}) {
        LatticeSumConstant direct = c_constant_direct(t, j, 100000);
        LatticeSumConstant ewald = c_constant_ewald(j, 1e-9);
        CAPTURE(j);
        CHECK(std::abs(direct.value - ewald.value) <= direct.bound + ewald.bound);
    }
}

TEST_CASE("sign pattern of C_j") {
    RadialCountTable t = build_table(3, 10000);
    CHECK(c_constant_direct(t, 0, 10000).value > 0.0);
    CHECK(c_constant_direct(t, 2, 10000).value < 0.0);
    CHECK(c_constant_direct(t, 4, 10000).value > 0.0);
}

TEST_CASE("direct-bound convergence rate at j = 2") {
    RadialCountTable t = build_table(3, 20000);
    double b1 = c_constant_direct(t, 2, 10000).bound;
    double b2 = c_constant_direct(t, 2, 20000).bound;
    CHECK(b2 / b1 <= std::pow(2.0, -1.5) + 0.05);
}

TEST_CASE("C_0 prefactor equals 1/(2 pi^3)") {
    // 4 (2 pi)^{-3} = 1/(2 pi^3); check against the scaled Epstein value.
    double s = epstein_sum_ewald(2.0, 1e-10);
    LatticeSumConstant c0 = c_constant_ewald(0, 1e-9);
    CHECK(c0.value ==
          doctest::Approx(s / (2.0 * std::pow(std::numbers::pi, 3.0))).epsilon(1e-12));
}

TEST_CASE("precision preconditions") {
    CHECK_THROWS(c_constant_ewald(0, 1e-13));
    CHECK_THROWS(epstein_sum_ewald(2.0, 1e-15));
}

}  // TEST_SUITE
