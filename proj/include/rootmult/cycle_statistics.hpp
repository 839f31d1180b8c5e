#pragma once

#include "rootmult/partition.hpp"
#include "rootmult/rational.hpp"

#include <map>
#include <span>
#include <utility>
#include <vector>

namespace rootmult {

// Cycle-count profile of a permutation of n symbols: counts[i] is the number
// of i-cycles, and sum i * counts[i] = n.
struct CycleType {
    long long n = 0;
    std::map<long long, long long> counts;  // only positive multiplicities stored

    static CycleType from_partition(const Partition& p);
    Partition to_partition() const;
    long long count(long long i) const {
        auto it = counts.find(i);
        return it == counts.end() ? 0 : it->second;
    }
    void validate() const;
};

// List of (cycle length k, exponent m) with pairwise-distinct k, m >= 1:
// the shape of a cycle-count monomial prod (c_{k_j})^{m_j}.
struct MomentTerm {
    long long k;
    long long m;
};

struct MomentSpec {
    std::vector<MomentTerm> terms;
    explicit MomentSpec(std::vector<MomentTerm> t);
    MomentSpec() = default;
};

// Cycle type of pi^q for any pi of type t: each k-cycle splits into (k,q)
// cycles of length k/(k,q).
CycleType power_cycle_type(const CycleType& t, long long q);

// All k <= k_cap with k/(k,q) = d, each with (k,q); these are exactly
// k = d*e with e | q and gcd(d, q/e) = 1, where (k,q) = e. Ascending in k.
std::vector<std::pair<long long, long long>> root_contributors(long long d, long long q, long long k_cap);

// --- low-level symbolic moment engine -------------------------------------
//
// A linear form sum a_k * c_k over distinct cycle lengths k, and products of
// powers/binomials of such forms over pairwise-disjoint length sets. The
// engine evaluates the mean over uniform S_n exactly for every n: each power
// is expanded into falling factorials of the underlying counts, whose means
// are prod k^{-s_k} when sum k*s_k <= n and zero otherwise.

struct LinearForm {
    std::vector<std::pair<long long, long long>> terms;  // (cycle length k, coefficient)
};

struct MomentFactor {
    LinearForm form;
    long long order = 0;
    bool is_binomial = false;  // binom(Y, order) instead of Y^order
};

// Mean of the product of the factors over uniform S_n; the cycle lengths
// appearing across all factors must be pairwise distinct. Memoized.
ExactScalar mixed_moment(std::span<const MomentFactor> factors, long long n);

// sum (k,q) * c_k over the contributors of d, capped at k <= min(k_cap, d*q).
LinearForm root_count_form(long long d, long long q, long long k_cap);

// --- named moments ---------------------------------------------------------

// Mean of prod (c_{k_j})_{s_j} (falling factorials) over uniform S_n:
// zero when sum k_j s_j > n, else prod k_j^{-s_j}.
ExactScalar falling_moment(std::span<const MomentTerm> spec, long long n);

// Mean of prod (c_{k_j})^{m_j} over uniform S_n, exact for every n.
ExactScalar power_moment(const MomentSpec& spec, long long n);

// Mean of prod (c_{k_j}(pi^q))^{m_j} over uniform S_n, exact for every n.
ExactScalar root_count_product_moment(const MomentSpec& spec, long long q, long long n);

// Mean of (c_1(pi^q))^delta over uniform S_n.
ExactScalar root_count_power_moment(long long delta, long long q, long long n);

// Binomial order per root-count variable: binom(c_d(pi^q), s).
struct BinomialOrder {
    long long d;
    long long s;
};

// Mean of prod_d binom(c_d(pi^q), s_d); distinct d required.
ExactScalar binomial_count_moment(std::span<const BinomialOrder> orders, long long q, long long n);

// Mean of binom(c_1(pi^q) + ... + c_r(pi^q), s).
ExactScalar binomial_sum_count_moment(long long r, long long s, long long q, long long n);

// Mean of (c_1(pi^q) + ... + c_r(pi^q))^delta.
ExactScalar truncated_sum_moment(long long r, long long delta, long long q, long long n);

}  // namespace rootmult
