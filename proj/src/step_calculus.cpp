#include "gsphere/step_calculus.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "gsphere/summation.hpp"

namespace gsphere {

namespace {

double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

}  // namespace

IteratedEvaluator::IteratedEvaluator(const RadialCountTable& table) : table_(&table) {
    if (table.dimension != 3)
        throw std::invalid_argument("IteratedEvaluator: requires a d=3 table");
    sqrt_n_.resize(table.counts.size());
    for (std::size_t n = 0; n < sqrt_n_.size(); ++n)
        sqrt_n_[n] = std::sqrt(static_cast<double>(n));
}

double IteratedEvaluator::eval_exact(int k, const SqrtRadius& sigma, unsigned threads) const {
    if (k < 0 || k > 16)
        throw std::invalid_argument("eval_exact: k must be in [0, 16]");
    std::int64_t m = sigma.floor_sigma2();
    if (m > table_->max_n)
        throw std::out_of_range("eval_exact: radius beyond table range");
    if (k == 0) return static_cast<double>(count_N(*table_, sigma));

    const double sig = sigma.sigma();
    const double inv_kfact = 1.0 / factorial(k);
    const double q = static_cast<double>(sigma.den);
    auto term = [&](std::int64_t n) -> double {
        std::int64_t r = table_->counts[static_cast<std::size_t>(n)];
        if (r == 0) return 0.0;
        double d = sig - sqrt_n_[static_cast<std::size_t>(n)];
        if (n > 0 && d < 1e-4 * sig) {
            // Cancellation control near shell boundaries:
            // Sigma - sqrt(n) = (Sigma^2 - n) / (Sigma + sqrt(n)), with the
            // numerator formed exactly from the rational Sigma^2.
            double num = static_cast<double>(sigma.num - n * sigma.den) / q;
            d = num / (sig + sqrt_n_[static_cast<std::size_t>(n)]);
        }
        double p = d;
        for (int i = 1; i < k; ++i) p *= d;
        return static_cast<double>(r) * p * inv_kfact;
    };
    return chunked_sum(0, m + 1, term, threads);
}

double IteratedEvaluator::eval_real(int k, double sigma) const {
    if (k < 0 || k > 16)
        throw std::invalid_argument("eval_real: k must be in [0, 16]");
    if (sigma < 0.0) return 0.0;
    double s2 = sigma * sigma;
    std::int64_t m = static_cast<std::int64_t>(s2);
    while (static_cast<double>(m + 1) <= s2) ++m;
    while (m > 0 && static_cast<double>(m) > s2) --m;
    if (m > table_->max_n)
        throw std::out_of_range("eval_real: radius beyond table range");
    if (k == 0) return static_cast<double>(table_->cumulative[static_cast<std::size_t>(m)]);
    const double inv_kfact = 1.0 / factorial(k);
    NeumaierSum acc;
    for (std::int64_t n = 0; n <= m; ++n) {
        std::int64_t r = table_->counts[static_cast<std::size_t>(n)];
        if (r == 0) continue;
        double d = sigma - sqrt_n_[static_cast<std::size_t>(n)];
        if (d <= 0.0) continue;
        double p = d;
        for (int i = 1; i < k; ++i) p *= d;
        acc.add(static_cast<double>(r) * p * inv_kfact);
    }
    return acc.value();
}

double IteratedEvaluator::eval_quadrature(int k, const SqrtRadius& sigma, double tol) const {
    if (k < 1 || k > 4)
        throw std::invalid_argument("eval_quadrature: k must be in [1, 4]");
    if (tol < 1e-12)
        throw std::invalid_argument("eval_quadrature: tol must be >= 1e-12");
    std::int64_t m_max = sigma.floor_sigma2();
    if (m_max > table_->max_n)
        throw std::out_of_range("eval_quadrature: radius beyond table range");
    const double sig = sigma.sigma();
    if (sigma.num == 0) return 0.0;

    // Piecewise polynomial in the local coordinate u = sigma - sqrt(m) on the
    // gap [sqrt(m), sqrt(m+1)). Level 0 is the step function N_3; each level
    // antidifferentiates segment-by-segment, threading the running value
    // through for continuity.
    std::size_t n_seg = static_cast<std::size_t>(m_max) + 1;
    std::vector<std::vector<double>> poly(n_seg);
    std::vector<double> seg_len(n_seg);
    for (std::size_t m = 0; m < n_seg; ++m) {
        poly[m] = {static_cast<double>(table_->cumulative[m])};
        double lo = sqrt_n_[m];
        double hi = (m + 1 < n_seg) ? sqrt_n_[m + 1] : sig;
        seg_len[m] = hi - lo;
    }
    seg_len[n_seg - 1] = sig - sqrt_n_[n_seg - 1];

    double magnitude = 0.0;
    for (int level = 0; level < k; ++level) {
        double running = 0.0;  // value of the integral at the segment start
        for (std::size_t m = 0; m < n_seg; ++m) {
            std::vector<double> anti(poly[m].size() + 1);
            anti[0] = running;
            for (std::size_t j = 0; j < poly[m].size(); ++j)
                anti[j + 1] = poly[m][j] / static_cast<double>(j + 1);
            // Horner at the segment end to seed the next segment.
            double u = seg_len[m];
            double v = 0.0;
            for (std::size_t j = anti.size(); j-- > 0;) v = v * u + anti[j];
            running = v;
            magnitude = std::max(magnitude, std::abs(v));
            poly[m] = std::move(anti);
        }
    }
    double result = 0.0;
    {
        double u = seg_len[n_seg - 1];
        for (std::size_t j = poly[n_seg - 1].size(); j-- > 0;)
            result = result * u + poly[n_seg - 1][j];
    }
    // Floating budget: ~1 ulp of the running magnitude per segment and level.
    double budget = static_cast<double>(n_seg) * k * magnitude *
                    std::numeric_limits<double>::epsilon() * 4.0;
    if (budget > tol)
        throw std::runtime_error("eval_quadrature: accumulation budget exceeds tolerance");
    return result;
}

}  // namespace gsphere
