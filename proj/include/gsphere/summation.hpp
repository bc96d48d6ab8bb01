#pragma once

// Compensated (Neumaier) accumulation and a fixed-chunk deterministic
// reduction. Chunks are 4096 terms wide and are always combined in index
// order, so a sum is bit-identical for any worker count.

#include <cstddef>
#include <cstdint>
#include <cmath>
#include <functional>
#include <thread>
#include <vector>

namespace gsphere {

class NeumaierSum {
public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

inline constexpr std::int64_t kSumChunk = 4096;

// Sum f(i) for i in [first, last). Each 4096-term chunk is accumulated with
// compensation; chunk totals are merged in ascending chunk index.
inline double chunked_sum(std::int64_t first, std::int64_t last,
                          const std::function<double(std::int64_t)>& f,
                          unsigned threads = 1) {
    if (last <= first) return 0.0;
    const std::int64_t n_chunks = (last - first + kSumChunk - 1) / kSumChunk;
    std::vector<double> partial(static_cast<std::size_t>(n_chunks), 0.0);
    auto run_chunk = [&](std::int64_t c) {
        std::int64_t lo = first + c * kSumChunk;
        std::int64_t hi = std::min(last, lo + kSumChunk);
        NeumaierSum s;
        for (std::int64_t i = lo; i < hi; ++i) s.add(f(i));
        partial[static_cast<std::size_t>(c)] = s.value();
    };
    if (threads <= 1 || n_chunks == 1) {
        for (std::int64_t c = 0; c < n_chunks; ++c) run_chunk(c);
    } else {
        std::vector<std::thread> pool;
        std::int64_t per = (n_chunks + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            std::int64_t lo = t * per, hi = std::min<std::int64_t>(n_chunks, lo + per);
            if (lo >= hi) break;
            pool.emplace_back([&, lo, hi] {
                for (std::int64_t c = lo; c < hi; ++c) run_chunk(c);
            });
        }
        for (auto& th : pool) th.join();
    }
    NeumaierSum total;
    for (double p : partial) total.add(p);
    return total.value();
}

}  // namespace gsphere
