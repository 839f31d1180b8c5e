#pragma once

#include "rootmult/bigint.hpp"
#include "rootmult/rational.hpp"

#include <iosfwd>
#include <vector>

namespace rootmult {

// All divisors of q, ascending. Trial division; q up to ~10^9 is fine.
std::vector<long long> divisors(long long q);

// sigma_alpha(q) = sum of d^alpha over d | q.
BigInt divisor_sigma(long long alpha, long long q);

// Number of odd divisors of q (often written sigma_0').
BigInt odd_divisor_count(long long q);

// Stirling numbers of the second kind {n brace k}: set partitions of n
// labeled objects into k nonempty blocks. Zero when k > n or (k=0, n>0).
BigInt stirling2(long long n, long long k);

// Unsigned Stirling numbers of the first kind [n brack k]: permutations of
// n objects with exactly k cycles.
BigInt stirling1(long long n, long long k);

// Coefficients ({n brace 1},...,{n brace n}) with x^n = sum_k {n brace k} (x)_k.
std::vector<BigInt> power_to_falling(long long n);

// Signed coefficients of x^1..x^n with (x)_n = sum_k (-1)^{n-k} [n brack k] x^k.
std::vector<BigInt> falling_to_power(long long n);

// H_r = sum_{d=1}^r 1/d, exact.
ExactScalar harmonic(long long r);

// The Stirling triangles are cached process-wide and grown on demand; this
// sets the number of rows built eagerly on first use (default 64).
void stirling_set_initial_rows(int rows);

// Textual persistence of both triangles: one "s1:n:k<TAB>value" or
// "s2:n:k<TAB>value" line per entry.
void stirling_cache_save(std::ostream& out);
void stirling_cache_load(std::istream& in);

}  // namespace rootmult
