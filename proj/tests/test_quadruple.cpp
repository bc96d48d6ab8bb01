#include <doctest.h>

#include "gsphere/quadruple.hpp"
#include "gsphere/trig_poly.hpp"

using namespace gsphere;

TEST_SUITE("quadruple") {

TEST_CASE("anchor quadruples") {
    CHECK(quadruple(0) == CoefficientQuadruple{0, 1, 0, 0, -1});
    // Direct integration: int_0^S (s cos s - sin s) ds = S sin S + 2 cos S - 2.
    CHECK(quadruple(1) == CoefficientQuadruple{1, 0, 1, 2, 0});
    CHECK(quadruple(4) == CoefficientQuadruple{4, 1, 0, 0, -5});
}

TEST_CASE("closed forms consistent with the matrix power") {
    for (int k = 0; k <= 64; ++k) {
        CoefficientQuadruple q = quadruple(k);
        CHECK(q.alpha == re_ik(k));
        CHECK(q.gamma == (k + 1) * im_ik(k));
        CHECK(q.delta == -(k + 1) * re_ik(k));
    }
}

TEST_CASE("the printed beta closed form contradicts the recursion") {
    // The recursion gives beta_k = +Im[i^k]; the often-quoted closed form
    // says -Im[i^k]. They differ for every odd k.
    for (int k = 0; k <= 16; ++k) {
        CHECK(quadruple(k).beta == im_ik(k));
        if (k % 2 == 1) CHECK(quadruple(k).beta != -im_ik(k));
    }
}

TEST_CASE("block form equals repeated multiplication") {
    Matrix4 m = recursion_matrix();
    for (int k = 0; k <= 64; ++k) CHECK(matrix_power(m, k) == matrix_power_block_form(k));
}

TEST_CASE("Q_k anchors and recursion route") {
    CHECK(q_polynomial(0).coeffs.empty());
    REQUIRE(q_polynomial(1).coeffs.size() == 1);
    CHECK(q_polynomial(1).coeffs[0] == Rational(-2));
    REQUIRE(q_polynomial(2).coeffs.size() == 2);
    CHECK(q_polynomial(2).coeffs[0] == Rational(0));
    CHECK(q_polynomial(2).coeffs[1] == Rational(-2));
    for (int k = 0; k <= 32; ++k) CHECK(q_polynomial(k) == q_polynomial_by_recursion(k));
}

TEST_CASE("symbolic antiderivative oracle confirms quadruples and Q_k") {
    for (int k = 0; k <= 8; ++k) {
        TrigPoly f = iterated_trig_oracle(k);
        CoefficientQuadruple q = quadruple(k);
        CHECK(trig_coeff(f.a, 1) == Rational(q.alpha));
        CHECK(trig_coeff(f.b, 1) == Rational(q.beta));
        CHECK(trig_coeff(f.a, 0) == Rational(q.gamma));
        CHECK(trig_coeff(f.b, 0) == Rational(q.delta));
        // Trig coefficient polynomials are exactly linear.
        CHECK(f.a.size() <= 2);
        CHECK(f.b.size() <= 2);
        QPolynomial qp = q_polynomial(k);
        for (std::size_t j = 0; j < std::max(f.p.size(), qp.coeffs.size()); ++j)
            CHECK(trig_coeff(f.p, j) ==
                  (j < qp.coeffs.size() ? qp.coeffs[j] : Rational(0)));
    }
}

TEST_CASE("input validation") {
    CHECK_THROWS(quadruple(-1));
    CHECK_THROWS(q_polynomial(65));
    CHECK_THROWS(matrix_power(recursion_matrix(), -2));
}

}  // TEST_SUITE
