#pragma once

#include "rootmult/bigint.hpp"
#include "rootmult/character.hpp"
#include "rootmult/cycle_statistics.hpp"
#include "rootmult/partition.hpp"
#include "rootmult/rational.hpp"

#include <chrono>
#include <map>
#include <stdexcept>
#include <string>

namespace rootmult {

// Raised when an exact path violates an internal invariant (a multiplicity
// that fails to be a non-negative integer, a self-check mismatch).
class internal_consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

enum class Method { brute, closed_form, asymptotic_main };

std::string method_name(Method m);

// Exact multiplicity of chi_lambda in the class function counting q-th roots,
// with provenance.
struct MultiplicityResult {
    BigInt value;
    Partition lambda;
    long long q = 1;
    Method method = Method::brute;
    std::chrono::duration<double, std::milli> elapsed{0};
};

// Main term and error envelope (the error expression without its universal
// constant) for the large-q behaviour of the multiplicity.
struct AsymptoticEstimate {
    ExactScalar main_term;
    ExactScalar error_scale;
    long long delta = 0;
    long long q = 1;
    bool delta_in_range = true;  // delta <= log q / log 2
};

// The partition (n - |mu|, mu); rejects n - |mu| < mu_1.
Partition lambda_from_mu(const Partition& mu, long long n);

// Average of chi_lambda over q-th powers, summed class by class with the
// rim-hook recursion. Exact; intended for |lambda| up to ~40. workers = 0
// means all hardware threads; the reduction order is fixed, so the result
// is identical for any worker count.
MultiplicityResult multiplicity_brute(const Partition& lambda, long long q, int workers = 0);

// Same quantity evaluated with no enumeration over S_n at all: the character
// is expanded into binomials of root-count variables whose means reduce to
// finite divisor sums. Exact for every valid n; runtime independent of n.
MultiplicityResult multiplicity_closed_form(const Partition& lambda, long long q);

// Closed form for lambda = (n - |mu|, mu) without materializing lambda, so n
// may exceed the part-size limit of Partition (the result's lambda field is
// filled only when the first row fits).
MultiplicityResult multiplicity_closed_form(const Partition& mu, long long n, long long q);

// Main term and error scale for lambda = (n - |mu|, mu) as q grows; rejects
// the empty mu (the one-row multiplicity is exactly 1, not asymptotic).
AsymptoticEstimate multiplicity_asymptotic(const Partition& mu, long long q);

// Exact value of the averaged binomial error aggregate
// sum_{j=1}^{Delta} mean binom(c_1(pi^q)+...+c_{j+1}(pi^q), Delta-j);
// equals 1 exactly when Delta = 1.
ExactScalar error_term_bound(const Partition& mu, long long q, long long n);

// Number of q-th roots per conjugacy class, by enumerating all n!
// permutations; the test oracle for everything else. n <= 8.
std::map<Partition, BigInt> brute_force_root_counts(int n, long long q);

}  // namespace rootmult
