#include <doctest.h>

#include <cmath>
#include <vector>

#include "gsphere/radial_counts.hpp"

using namespace gsphere;

namespace {

// Independent oracle: direct enumeration of lattice points shell by shell.
std::vector<std::int64_t> enumerate_counts(int d, std::int64_t max_n) {
    std::vector<std::int64_t> counts(static_cast<std::size_t>(max_n + 1), 0);
    auto lim = static_cast<std::int64_t>(std::sqrt(static_cast<double>(max_n))) + 1;
    if (d == 1) {
        for (std::int64_t a = -lim; a <= lim; ++a)
            if (a * a <= max_n) ++counts[static_cast<std::size_t>(a * a)];
    } else if (d == 2) {
        for (std::int64_t a = -lim; a <= lim; ++a)
            for (std::int64_t b = -lim; b <= lim; ++b) {
                std::int64_t n = a * a + b * b;
                if (n <= max_n) ++counts[static_cast<std::size_t>(n)];
            }
    } else {
        for (std::int64_t a = -lim; a <= lim; ++a)
            for (std::int64_t b = -lim; b <= lim; ++b) {
                std::int64_t ab = a * a + b * b;
                if (ab > max_n) continue;
                for (std::int64_t c = -lim; c <= lim; ++c) {
                    std::int64_t n = ab + c * c;
                    if (n <= max_n) ++counts[static_cast<std::size_t>(n)];
                }
            }
    }
    return counts;
}

}  // namespace

TEST_SUITE("radial_counts") {

TEST_CASE("sieve matches brute-force enumeration") {
    for (int d : {1, 2, 3}) {
        RadialCountTable table = build_table(d, 2000);
        std::vector<std::int64_t> oracle = enumerate_counts(d, 2000);
        for (std::int64_t n = 0; n <= 2000; ++n) {
            CAPTURE(d);
            CAPTURE(n);
            REQUIRE(table.counts[static_cast<std::size_t>(n)] ==
                    oracle[static_cast<std::size_t>(n)]);
        }
    }
}

TEST_CASE("known small values") {
    RadialCountTable t = build_table(3, 10);
    const std::vector<std::int64_t> expected{1, 6, 12, 8, 6, 24, 24, 0, 12, 30, 24};
    for (std::size_t n = 0; n <= 10; ++n) CHECK(t.counts[n] == expected[n]);
    CHECK(count_N(t, SqrtRadius::from_sigma2(1, 1)) == 7);
    CHECK(count_N(t, SqrtRadius::from_sigma2(2, 1)) == 19);
    // A radius just below sqrt(2) excludes the 12-point shell.
    CHECK(count_N(t, SqrtRadius::from_sigma2(199, 100)) == 7);
}

TEST_CASE("no representations for n = 7 mod 8 (three squares theorem)") {
    RadialCountTable t = build_table(3, 4000);
    for (std::int64_t n = 7; n <= 4000; n += 8)
        CHECK(t.counts[static_cast<std::size_t>(n)] == 0);
}

TEST_CASE("cube-covering sandwich contains the counts") {
    RadialCountTable t = build_table(3, 4000);
    for (std::int64_t n = 1; n <= 4000; n += 13) {
        double r = std::sqrt(static_cast<double>(n));
        auto count = static_cast<double>(t.cumulative[static_cast<std::size_t>(n)]);
        CHECK(count >= ball_count_lower(r));
        CHECK(count <= ball_count_upper(r));
    }
}

TEST_CASE("thread count does not change the table") {
    RadialCountTable a = build_table(3, 5000, 1);
    RadialCountTable b = build_table(3, 5000, 4);
    CHECK(a.counts == b.counts);
    CHECK(a.cumulative == b.cumulative);
}

TEST_CASE("tail bound dominates measured partial tails") {
    RadialCountTable t = build_table(3, 40000);
    for (double s : {2.0, 2.5, 3.0, 3.5}) {
        for (std::int64_t cut : {100, 1000, 10000}) {
            double measured = 0.0;
            for (std::int64_t n = cut + 1; n <= 40000; ++n)
                measured += static_cast<double>(t.counts[static_cast<std::size_t>(n)]) *
                            std::pow(static_cast<double>(n), -s);
            CAPTURE(s);
            CAPTURE(cut);
            CHECK(measured <= r3_tail_bound(static_cast<double>(cut), s));
        }
    }
    CHECK_THROWS(r3_tail_bound(10.0, 1.5));
}

TEST_CASE("input validation") {
    CHECK_THROWS(build_table(4, 10));
    CHECK_THROWS(build_table(3, 200000000));
    RadialCountTable t = build_table(3, 10);
    CHECK_THROWS(count_N(t, SqrtRadius::from_sigma2(11, 1)));
}

}  // TEST_SUITE
