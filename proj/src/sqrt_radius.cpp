#include "gsphere/sqrt_radius.hpp"

#include <numeric>

namespace gsphere {

SqrtRadius SqrtRadius::from_sigma2(std::int64_t p, std::int64_t q) {
    if (q == 0) throw std::invalid_argument("SqrtRadius: zero denominator");
    if (q < 0) { p = -p; q = -q; }
    if (p < 0) throw std::invalid_argument("SqrtRadius: Sigma^2 must be nonnegative");
    std::int64_t g = std::gcd(p, q);
    if (g > 1) { p /= g; q /= g; }
    return SqrtRadius{p, q};
}

SqrtRadius SqrtRadius::from_double(double sigma) {
    if (!(sigma >= 0.0)) throw std::invalid_argument("SqrtRadius: negative or NaN radius");
    double x = sigma * sigma;
    // Continued-fraction convergents of x with denominator capped at 10^6.
    const std::int64_t kMaxDen = 1000000;
    std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double t = x;
    for (int iter = 0; iter < 64; ++iter) {
        std::int64_t a = static_cast<std::int64_t>(std::floor(t));
        std::int64_t p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > kMaxDen || p2 < 0) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double frac = t - static_cast<double>(a);
        if (frac < 1e-15) break;
        t = 1.0 / frac;
    }
    if (q1 == 0) return SqrtRadius{0, 1};
    return from_sigma2(p1, q1);
}

SqrtRadius SqrtRadius::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos)
        return from_sigma2(std::stoll(text), 1);
    return from_sigma2(std::stoll(text.substr(0, slash)),
                       std::stoll(text.substr(slash + 1)));
}

}  // namespace gsphere
