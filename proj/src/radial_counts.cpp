#include "gsphere/radial_counts.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace gsphere {

namespace {

constexpr std::int64_t kMaxTableSize = 100000000;  // 10^8 capacity guard
constexpr double kHalfDiag = 0.8660254037844386;   // sqrt(3)/2

std::vector<std::int64_t> counts_d1(std::int64_t max_n) {
    std::vector<std::int64_t> r(static_cast<std::size_t>(max_n) + 1, 0);
    r[0] = 1;
    for (std::int64_t a = 1; a * a <= max_n; ++a) r[static_cast<std::size_t>(a * a)] = 2;
    return r;
}

std::vector<std::int64_t> counts_d2(std::int64_t max_n, unsigned threads) {
    std::vector<std::int64_t> r(static_cast<std::size_t>(max_n) + 1, 0);
    std::int64_t a_max = static_cast<std::int64_t>(std::sqrt(static_cast<double>(max_n))) + 1;
    while (a_max * a_max > max_n) --a_max;
    auto sieve_range = [&](std::int64_t a_lo, std::int64_t a_hi, std::vector<std::int64_t>& out) {
        for (std::int64_t a = a_lo; a <= a_hi; ++a) {
            std::int64_t a2 = a * a;
            std::int64_t mult_a = (a == 0) ? 1 : 2;
            for (std::int64_t b = 0; a2 + b * b <= max_n; ++b) {
                std::int64_t mult = mult_a * ((b == 0) ? 1 : 2);
                out[static_cast<std::size_t>(a2 + b * b)] += mult;
            }
        }
    };
    if (threads <= 1 || a_max < 64) {
        sieve_range(0, a_max, r);
    } else {
        // Disjoint ranges of a; per-thread buffers merged additively, so the
        // result is identical for any thread count.
        std::vector<std::vector<std::int64_t>> bufs(threads);
        std::vector<std::thread> pool;
        std::int64_t per = (a_max + 1 + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            std::int64_t lo = t * per, hi = std::min<std::int64_t>(a_max, lo + per - 1);
            if (lo > a_max) break;
            bufs[t].assign(r.size(), 0);
            pool.emplace_back([&, t, lo, hi] { sieve_range(lo, hi, bufs[t]); });
        }
        for (auto& th : pool) th.join();
        for (auto& buf : bufs)
            for (std::size_t i = 0; i < buf.size() && i < r.size(); ++i) r[i] += buf[i];
    }
    return r;
}

// r_3 = r_1 * r_2 (additive convolution over perfect squares):
//   r_3(n) = r_2(n) + 2 * sum_{a>=1, a^2<=n} r_2(n - a^2).
std::vector<std::int64_t> counts_d3(std::int64_t max_n, unsigned threads) {
    std::vector<std::int64_t> r2 = counts_d2(max_n, threads);
    std::vector<std::int64_t> r(static_cast<std::size_t>(max_n) + 1, 0);
    auto convolve_range = [&](std::int64_t lo, std::int64_t hi) {
        for (std::int64_t n = lo; n <= hi; ++n) {
            std::int64_t acc = r2[static_cast<std::size_t>(n)];
            for (std::int64_t a = 1; a * a <= n; ++a)
                acc += 2 * r2[static_cast<std::size_t>(n - a * a)];
            r[static_cast<std::size_t>(n)] = acc;
        }
    };
    if (threads <= 1 || max_n < 4096) {
        convolve_range(0, max_n);
    } else {
        std::vector<std::thread> pool;
        std::int64_t per = (max_n + 1 + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            std::int64_t lo = t * per, hi = std::min<std::int64_t>(max_n, lo + per - 1);
            if (lo > max_n) break;
            pool.emplace_back([&, lo, hi] { convolve_range(lo, hi); });
        }
        for (auto& th : pool) th.join();
    }
    return r;
}

}  // namespace

RadialCountTable build_table(int dimension, std::int64_t max_n, unsigned threads) {
    if (dimension < 1 || dimension > 3)
        throw std::invalid_argument("build_table: dimension must be 1, 2, or 3");
    if (max_n < 0) throw std::invalid_argument("build_table: max_n must be nonnegative");
    if (max_n > kMaxTableSize)
        throw std::length_error("build_table: max_n exceeds 10^8 capacity limit");

    RadialCountTable table;
    table.dimension = dimension;
    table.max_n = max_n;
    switch (dimension) {
        case 1: table.counts = counts_d1(max_n); break;
        case 2: table.counts = counts_d2(max_n, threads); break;
        case 3: table.counts = counts_d3(max_n, threads); break;
    }
    table.cumulative.resize(table.counts.size());
    std::int64_t run = 0;
    for (std::size_t i = 0; i < table.counts.size(); ++i) {
        run += table.counts[i];
        table.cumulative[i] = run;
    }
    return table;
}

std::int64_t count_N(const RadialCountTable& table, const SqrtRadius& sigma) {
    std::int64_t n = sigma.floor_sigma2();
    if (n > table.max_n)
        throw std::out_of_range("count_N: radius beyond table range");
    return table.cumulative[static_cast<std::size_t>(n)];
}

double ball_count_lower(double radius) {
    double r = radius - kHalfDiag;
    if (r < 0.0) return 0.0;
    return (4.0 * std::numbers::pi / 3.0) * r * r * r;
}

double ball_count_upper(double radius) {
    double r = radius + kHalfDiag;
    return (4.0 * std::numbers::pi / 3.0) * r * r * r;
}

double r3_tail_bound(double n_cut, double s) {
    if (!(s > 1.5)) throw std::invalid_argument("r3_tail_bound: requires s > 3/2");
    if (n_cut < 1.0) throw std::invalid_argument("r3_tail_bound: requires N >= 1");
    // Tail(N, s) = sum_{n>N} (A(n)-A(n-1)) n^{-s} with A(x) = N_3(sqrt(x)).
    // Summation by parts with decreasing weights n^{-s} and the cube bound
    // A(x) <= (4pi/3)(sqrt(x)+c)^3 gives
    //   Tail <= sum_{n>N} (4pi/3)(sqrt(n)+c)^3 * s * n^{-s-1}
    // and the summand is decreasing, so the sum is at most the integral from N:
    const double c = kHalfDiag;
    const double pref = 4.0 * std::numbers::pi * s / 3.0;
    double t1 = std::pow(n_cut, 1.5 - s) / (s - 1.5);
    double t2 = 3.0 * c * std::pow(n_cut, 1.0 - s) / (s - 1.0);
    double t3 = 3.0 * c * c * std::pow(n_cut, 0.5 - s) / (s - 0.5);
    double t4 = c * c * c * std::pow(n_cut, -s) / s;
    return pref * (t1 + t2 + t3 + t4);
}

}  // namespace gsphere
