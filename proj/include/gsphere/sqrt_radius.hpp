#pragma once

// Exact radius representation. A radius Sigma is stored as the reduced
// rational Sigma^2 = num/den, so the shell-inclusion test n <= Sigma^2 is an
// integer comparison and boundary spheres are never misclassified by a
// floating sqrt.

#include <cstdint>
#include <cmath>
#include <stdexcept>
#include <string>

namespace gsphere {

struct SqrtRadius {
    std::int64_t num = 0;  // Sigma^2 numerator, >= 0
    std::int64_t den = 1;  // Sigma^2 denominator, > 0

    static SqrtRadius from_sigma2(std::int64_t p, std::int64_t q);

    // Rounds sigma^2 to the nearest rational with denominator <= 10^6
    // (continued-fraction best approximation). Lossy for irrational input;
    // callers that care about exact shells should use from_sigma2.
    static SqrtRadius from_double(double sigma);

    static SqrtRadius parse(const std::string& text);  // "p/q" or "p"

    double sigma2() const { return static_cast<double>(num) / static_cast<double>(den); }
    double sigma() const { return std::sqrt(sigma2()); }
    std::int64_t floor_sigma2() const { return num / den; }

    // Exact test n <= Sigma^2, i.e. the shell of squared radius n is inside.
    bool shell_included(std::int64_t n) const {
        return static_cast<__int128>(n) * den <= static_cast<__int128>(num);
    }

    std::string to_string() const {
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

}  // namespace gsphere
