#pragma once

// Representation-number tables r_d(n) = #{(a_1..a_d) in Z^d : sum a_i^2 = n}
// for d in {1,2,3}, and the counting function N_d(Sigma) = #{v : |v| <= Sigma}
// as the running sum of r_d. d=3 is built by convolving the d=1 and d=2
// tables; a brute-force ball enumeration lives in the tests as the oracle.
//
// Tables are immutable after construction and safe for concurrent reads.

#include <cstdint>
#include <vector>

#include "gsphere/sqrt_radius.hpp"

namespace gsphere {

struct RadialCountTable {
    int dimension = 0;
    std::int64_t max_n = 0;
    std::vector<std::int64_t> counts;      // r_d(0..max_n)
    std::vector<std::int64_t> cumulative;  // N_d(sqrt(n)) = sum_{m<=n} r_d(m)
};

// Rejects d outside {1,2,3} and max_n > 10^8 (capacity guard).
RadialCountTable build_table(int dimension, std::int64_t max_n, unsigned threads = 1);

// N_d(Sigma) = cumulative[floor(Sigma^2)]; exact boundary handling.
// Throws std::out_of_range for radii beyond the table.
std::int64_t count_N(const RadialCountTable& table, const SqrtRadius& sigma);

// Unit-cube covering sandwich for the ball count:
//   (4pi/3)(R - c)^3 <= N_3(R) <= (4pi/3)(R + c)^3,  c = sqrt(3)/2, R >= c.
double ball_count_lower(double radius);
double ball_count_upper(double radius);

// Rigorous upper bound on the lattice-sum tail
//   Tail(N, s) = sum_{n > N} r_3(n) n^{-s}   (requires s > 3/2, N >= 1),
// obtained by Abel summation against the cube-covering sandwich above.
double r3_tail_bound(double n_cut, double s);

}  // namespace gsphere
