#include "gsphere/oscillatory.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "gsphere/lattice_sums.hpp"
#include "gsphere/quadruple.hpp"
#include "gsphere/summation.hpp"

namespace gsphere {

namespace {

const LatticeSumConstant& cached_c(int j) {
    static std::map<int, LatticeSumConstant> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(j);
    if (it == cache.end())
        it = cache.emplace(j, c_constant_ewald(j, 1e-12)).first;
    return it->second;
}

}  // namespace

BoundedValue eval_ok(const RadialCountTable& table, int k, double sigma,
                     std::int64_t n_terms, BetaConvention convention,
                     unsigned threads) {
    if (k < 2)
        throw std::invalid_argument("eval_ok: k >= 2 required (series not absolutely convergent)");
    if (sigma < 0.0) throw std::invalid_argument("eval_ok: sigma must be >= 0");
    if (table.dimension != 3)
        throw std::invalid_argument("eval_ok: requires a d=3 table");
    if (n_terms < 1 || n_terms > table.max_n)
        throw std::out_of_range("eval_ok: n_terms beyond table range");

    CoefficientQuadruple q = quadruple(k);
    const double alpha = static_cast<double>(q.alpha);
    const double beta = convention == BetaConvention::recursion
                            ? static_cast<double>(q.beta)
                            : static_cast<double>(-im_ik(k));
    const double gamma = static_cast<double>(q.gamma);
    const double delta = static_cast<double>(q.delta);
    const double two_pi = 2.0 * std::numbers::pi;

    auto term = [&](std::int64_t n) -> double {
        std::int64_t r = table.counts[static_cast<std::size_t>(n)];
        if (r == 0) return 0.0;
        double root = std::sqrt(static_cast<double>(n));
        double w = two_pi * root;
        double z = w * sigma;
        double bracket = alpha * sigma * std::cos(z) + beta * sigma * std::sin(z) +
                         (gamma * std::cos(z) + delta * std::sin(z)) / w;
        return -(1.0 / std::numbers::pi) * static_cast<double>(r) /
               static_cast<double>(n) * std::pow(w, -k) * bracket;
    };
    double value = chunked_sum(1, n_terms + 1, term, threads);
    double abs_sum = chunked_sum(
        1, n_terms + 1, [&](std::int64_t n) { return std::abs(term(n)); }, threads);

    double coeff = (1.0 / std::numbers::pi) * std::pow(two_pi, -k) *
                   (sigma * (std::abs(alpha) + std::abs(beta)) +
                    (std::abs(gamma) + std::abs(delta)) / two_pi);
    double tail = coeff * r3_tail_bound(static_cast<double>(n_terms), 1.0 + 0.5 * k);
    double fp_budget = static_cast<double>(n_terms) *
                       std::numeric_limits<double>::epsilon() * abs_sum;
    return BoundedValue{value, tail + fp_budget, n_terms};
}

double main_coefficient(int k) {
    if (k < 0) throw std::invalid_argument("main_coefficient: k must be >= 0");
    double f = 1.0;
    for (int i = 2; i <= 3 + k; ++i) f *= i;
    return 8.0 * std::numbers::pi / f;
}

BoundedValue main_formula(const RadialCountTable& table, int k, double sigma,
                          std::int64_t n_terms, unsigned threads) {
    BoundedValue osc = eval_ok(table, k, sigma, n_terms,
                               BetaConvention::recursion, threads);
    NeumaierSum acc;
    double abs_parts = std::abs(osc.value);
    double lead = main_coefficient(k) * std::pow(sigma, 3 + k);
    acc.add(lead);
    abs_parts += std::abs(lead);
    double c_bound = 0.0;
    double mfact = 1.0;
    for (int m = 0; m < k; ++m) {
        if (m > 0) mfact *= m;
        int j = k - 1 - m;
        if (j % 2 != 0) continue;  // C_j = 0 for odd j
        const LatticeSumConstant& c = cached_c(j);
        double weight = std::pow(sigma, m) / mfact;
        acc.add(c.value * weight);
        c_bound += c.bound * std::abs(weight);
        abs_parts += std::abs(c.value * weight);
    }
    acc.add(osc.value);
    double fp_budget = 16.0 * std::numeric_limits<double>::epsilon() * abs_parts;
    return BoundedValue{acc.value(), osc.bound + c_bound + fp_budget,
                        osc.terms_used};
}

}  // namespace gsphere
