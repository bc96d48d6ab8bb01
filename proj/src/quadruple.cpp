#include "gsphere/quadruple.hpp"

#include <stdexcept>

namespace gsphere {

Matrix4 recursion_matrix() {
    Matrix4 m{};
    m[0][1] = -1;
    m[1][0] = +1;
    m[2][0] = +1;
    m[2][3] = -1;
    m[3][1] = +1;
    m[3][2] = +1;
    return m;
}

namespace {

Matrix4 identity4() {
    Matrix4 m{};
    for (int i = 0; i < 4; ++i) m[i][i] = 1;
    return m;
}

Matrix4 mul(const Matrix4& a, const Matrix4& b) {
    Matrix4 c{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            std::int64_t s = 0;
            for (int l = 0; l < 4; ++l) s += a[i][l] * b[l][j];
            c[i][j] = s;
        }
    return c;
}

}  // namespace

Matrix4 matrix_power(const Matrix4& m, std::int64_t k) {
    if (k < 0) throw std::invalid_argument("matrix_power: negative exponent");
    Matrix4 result = identity4();
    Matrix4 base = m;
    while (k > 0) {
        if (k & 1) result = mul(result, base);
        base = mul(base, base);
        k >>= 1;
    }
    return result;
}

int re_ik(std::int64_t k) {
    switch (k & 3) {
        case 0: return 1;
        case 2: return -1;
        default: return 0;
    }
}

int im_ik(std::int64_t k) {
    switch (k & 3) {
        case 1: return 1;
        case 3: return -1;
        default: return 0;
    }
}

Matrix4 matrix_power_block_form(std::int64_t k) {
    if (k < 0) throw std::invalid_argument("matrix_power_block_form: negative exponent");
    // J^k = [[Re i^k, -Im i^k], [Im i^k, Re i^k]]
    Matrix4 m{};
    std::int64_t re = re_ik(k), im = im_ik(k);
    m[0][0] = re; m[0][1] = -im;
    m[1][0] = im; m[1][1] = re;
    m[2][2] = re; m[2][3] = -im;
    m[3][2] = im; m[3][3] = re;
    if (k > 0) {
        std::int64_t re1 = re_ik(k - 1), im1 = im_ik(k - 1);
        m[2][0] = k * re1; m[2][1] = -k * im1;
        m[3][0] = k * im1; m[3][1] = k * re1;
    }
    return m;
}

CoefficientQuadruple quadruple(std::int64_t k) {
    if (k < 0 || k > 1000000)
        throw std::invalid_argument("quadruple: k must be in [0, 10^6]");
    Matrix4 mk = matrix_power(recursion_matrix(), k);
    const std::array<std::int64_t, 4> v0{1, 0, 0, -1};
    std::array<std::int64_t, 4> v{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) v[i] += mk[i][j] * v0[j];
    return CoefficientQuadruple{static_cast<int>(k), v[0], v[1], v[2], v[3]};
}

QPolynomial q_polynomial(int k) {
    if (k < 0 || k > 64)
        throw std::invalid_argument("q_polynomial: k must be in [0, 64]");
    QPolynomial q;
    q.k = k;
    boost::multiprecision::cpp_int jfact = 1;
    for (int j = 0; j < k; ++j) {
        if (j > 0) jfact *= j;
        q.coeffs.push_back(Rational(k - j + 1) * im_ik(k - j + 2) / Rational(jfact));
    }
    return q;
}

QPolynomial q_polynomial_by_recursion(int k) {
    if (k < 0 || k > 64)
        throw std::invalid_argument("q_polynomial_by_recursion: k must be in [0, 64]");
    QPolynomial q;  // Q_0 = 0
    q.k = 0;
    for (int step = 1; step <= k; ++step) {
        std::vector<Rational> next(q.coeffs.size() + 1);
        CoefficientQuadruple prev = quadruple(step - 1);
        next[0] = Rational(-prev.alpha + prev.delta);
        for (std::size_t j = 0; j < q.coeffs.size(); ++j)
            next[j + 1] = q.coeffs[j] / Rational(j + 1);
        q.coeffs = std::move(next);
        q.k = step;
    }
    return q;
}

}  // namespace gsphere
