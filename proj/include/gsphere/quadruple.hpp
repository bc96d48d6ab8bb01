#pragma once

// Coefficients of the k-fold antiderivative of  sigma*cos(sigma) - sin(sigma):
//   D^{-k}[ s cos s - sin s ] = Q_k(s) + a_k s cos s + b_k s sin s
//                                      + g_k cos s + d_k sin s.
// The quadruple (a, b, g, d) evolves by a fixed 4x4 integer matrix M, applied
// as an exact integer matrix power to (1, 0, 0, -1). The matrix power is the
// single source of truth here; the closed forms a_k = Re[i^k],
// g_k = (k+1) Im[i^k], d_k = -(k+1) Re[i^k] are consistent with it, while the
// frequently quoted closed form b_k = -Im[i^k] is NOT (the recursion gives
// b_1 = +1, as direct integration confirms); see BetaConvention in
// oscillatory.hpp for the regression hook.
//
// Q_k carries exact rational coefficients: [Q_k]_j = (k-j+1) Im[i^{k-j+2}]/j!.

#include <array>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gsphere {

using Rational = boost::multiprecision::cpp_rational;

struct CoefficientQuadruple {
    int k = 0;
    std::int64_t alpha = 0;  // coefficient of s*cos(s)
    std::int64_t beta = 0;   // coefficient of s*sin(s)
    std::int64_t gamma = 0;  // coefficient of cos(s)
    std::int64_t delta = 0;  // coefficient of sin(s)

    bool operator==(const CoefficientQuadruple&) const = default;
};

struct QPolynomial {
    int k = 0;
    std::vector<Rational> coeffs;  // [Q_k]_j for j = 0..k-1; empty for k = 0

    bool operator==(const QPolynomial&) const = default;
};

using Matrix4 = std::array<std::array<std::int64_t, 4>, 4>;

// The recursion matrix (nonzero entries m12=-1, m21=+1, m31=+1, m34=-1,
// m42=+1, m43=+1) and its exact k-th power by repeated squaring.
Matrix4 recursion_matrix();
Matrix4 matrix_power(const Matrix4& m, std::int64_t k);

// Block form M^k = [[J^k, 0], [k J^{k-1}, J^k]], J = 90-degree rotation.
Matrix4 matrix_power_block_form(std::int64_t k);

// Re[i^k], Im[i^k] as integers in {-1, 0, 1}.
int re_ik(std::int64_t k);
int im_ik(std::int64_t k);

// Exact quadruple via M^k (1,0,0,-1)^T. k up to 10^6.
CoefficientQuadruple quadruple(std::int64_t k);

// Exact rational Q_k from the closed-form coefficients. k up to 64.
QPolynomial q_polynomial(int k);

// Independent route: run the recursion Q_k = int_0^S Q_{k-1} + (-a_{k-1} + d_{k-1}).
QPolynomial q_polynomial_by_recursion(int k);

}  // namespace gsphere
