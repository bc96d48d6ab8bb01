#pragma once

// Exact symbolic antidifferentiation in the algebra
//   f(s) = P(s) + A(s) cos s + B(s) sin s,
// P, A, B polynomials with rational coefficients. The antiderivative with
// F(0) = 0 is again of this form: the trig part solves U' + V = A, V' - U = B
// (so V = sum_i (-1)^i (A + B')^{(2i)}, U = V' - B), and the constant is fixed
// by F(0) = 0. Iterating k times from s cos s - sin s yields, independently of
// the matrix recursion, the coefficient quadruple and the polynomial Q_k.

#include <vector>

#include "gsphere/quadruple.hpp"

namespace gsphere {

using Poly = std::vector<Rational>;  // coefficient of s^j at index j

inline Poly poly_derivative(const Poly& p) {
    Poly d;
    for (std::size_t j = 1; j < p.size(); ++j) d.push_back(p[j] * Rational(j));
    return d;
}

inline Poly poly_integral(const Poly& p) {  // vanishing at 0
    Poly q{Rational(0)};
    for (std::size_t j = 0; j < p.size(); ++j) q.push_back(p[j] / Rational(j + 1));
    return q;
}

inline Poly poly_add(const Poly& a, const Poly& b) {
    Poly c(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t j = 0; j < a.size(); ++j) c[j] += a[j];
    for (std::size_t j = 0; j < b.size(); ++j) c[j] += b[j];
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

inline Poly poly_negate(Poly p) {
    for (auto& c : p) c = -c;
    return p;
}

struct TrigPoly {
    Poly p;  // polynomial part
    Poly a;  // coefficient of cos s
    Poly b;  // coefficient of sin s
};

// Antiderivative vanishing at 0.
inline TrigPoly trig_antiderivative(const TrigPoly& f) {
    Poly source = poly_add(f.a, poly_derivative(f.b));
    Poly v;
    bool plus = true;
    while (!source.empty()) {
        v = poly_add(v, plus ? source : poly_negate(source));
        plus = !plus;
        source = poly_derivative(poly_derivative(source));
    }
    Poly u = poly_add(poly_derivative(v), poly_negate(f.b));
    TrigPoly out;
    out.a = u;
    out.b = v;
    out.p = poly_integral(f.p);
    // F(0) = P(0) + U(0); shift the polynomial part so F(0) = 0.
    Rational at_zero = (out.p.empty() ? Rational(0) : out.p[0]) +
                       (u.empty() ? Rational(0) : u[0]);
    if (out.p.empty()) out.p.push_back(Rational(0));
    out.p[0] -= at_zero;
    while (!out.p.empty() && out.p.back() == 0) out.p.pop_back();
    return out;
}

// k-fold antiderivative of s cos s - sin s; the independent oracle for the
// quadruple recursion and for Q_k.
inline TrigPoly iterated_trig_oracle(int k) {
    TrigPoly f;
    f.a = Poly{Rational(0), Rational(1)};  // s cos s
    f.b = Poly{Rational(-1)};              // - sin s
    for (int i = 0; i < k; ++i) f = trig_antiderivative(f);
    return f;
}

inline Rational trig_coeff(const Poly& p, std::size_t j) {
    return j < p.size() ? p[j] : Rational(0);
}

}  // namespace gsphere
