#include "rootmult/verify.hpp"

#include "rootmult/multiplicity.hpp"
#include "rootmult/number_theory.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace rootmult {

void SuiteResult::fail(const std::string& note) {
    ++checks;
    ++failures;
    if (notes.size() < 20) notes.push_back(note);
}

namespace {

// Tally of cycle types over all n! permutations of pi^q, by direct array
// powering; deliberately independent of the symbolic machinery it checks.
std::map<Partition, long long> powered_census(int n, long long q) {
    auto cycle_type_of = [n](const std::vector<int>& perm) {
        std::vector<int> lens;
        std::vector<bool> used(n, false);
        for (int i = 0; i < n; ++i) {
            if (used[i]) continue;
            int len = 0, j = i;
            while (!used[j]) {
                used[j] = true;
                j = perm[j];
                ++len;
            }
            lens.push_back(len);
        }
        std::sort(lens.rbegin(), lens.rend());
        return Partition(std::move(lens));
    };

    std::map<Partition, long long> tally;
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        std::vector<int> power(n);
        std::iota(power.begin(), power.end(), 0);
        std::vector<int> base = sigma;
        long long e = q;
        while (e > 0) {
            if (e & 1) {
                std::vector<int> next(n);
                for (int i = 0; i < n; ++i) next[i] = base[power[i]];
                power = std::move(next);
            }
            e >>= 1;
            if (e) {
                std::vector<int> sq(n);
                for (int i = 0; i < n; ++i) sq[i] = base[base[i]];
                base = std::move(sq);
            }
        }
        ++tally[cycle_type_of(power)];
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return tally;
}

ExactScalar census_moment(const std::map<Partition, long long>& tally, long long nfactorial_count,
                          const MomentSpec& spec, bool falling) {
    BigInt total = 0;
    for (const auto& [type, mult] : tally) {
        CycleType t = CycleType::from_partition(type);
        BigInt value = 1;
        for (const auto& [k, m] : spec.terms) {
            long long c = t.count(k);
            if (falling) {
                BigInt f = 1;
                for (long long i = 0; i < m; ++i) f *= big(c - i);
                value *= f;
            } else {
                value *= int_pow(c, m);
            }
            if (value == 0) break;
        }
        total += value * big(mult);
    }
    return ExactScalar(total, big(nfactorial_count));
}

// Every moment spec whose monomial weight sum k_j m_j is at most `cap`:
// one per partition (part values become the k_j, multiplicities the m_j).
std::vector<MomentSpec> specs_up_to_weight(int cap) {
    std::vector<MomentSpec> specs;
    for (int w = 1; w <= cap; ++w) {
        for (const Partition& p : partitions_of(w)) {
            std::vector<MomentTerm> terms;
            for (auto [k, m] : p.part_multiplicities()) terms.push_back({k, m});
            specs.push_back(MomentSpec(std::move(terms)));
        }
    }
    return specs;
}

std::string spec_str(const MomentSpec& spec) {
    std::string s;
    for (const auto& [k, m] : spec.terms) {
        if (!s.empty()) s += ',';
        s += std::to_string(k) + ":" + std::to_string(m);
    }
    return s;
}

long long next_prime_above(long long value) {
    BigInt p;
    mpz_nextprime(p.get_mpz_t(), big(value).get_mpz_t());
    return p.get_si();
}

}  // namespace

SuiteResult verify_scharf(int max_n, long long max_q) {
    SuiteResult res;
    res.suite = "scharf";
    for (int n = 1; n <= max_n; ++n) {
        for (const Partition& lambda : partitions_of(n)) {
            for (long long q = 1; q <= max_q; ++q) {
                try {
                    MultiplicityResult brute = multiplicity_brute(lambda, q);
                    MultiplicityResult closed = multiplicity_closed_form(lambda, q);
                    if (sgn(brute.value) < 0 || sgn(closed.value) < 0)
                        res.fail("negative multiplicity at lambda=" + lambda.str() + " q=" + std::to_string(q));
                    else
                        res.pass();
                } catch (const internal_consistency_error& e) {
                    res.fail(e.what());
                }
            }
        }
    }
    return res;
}

SuiteResult verify_agreement(int max_n, long long max_q, int workers) {
    SuiteResult res;
    res.suite = "agreement";
    for (int n = 1; n <= max_n; ++n) {
        for (const Partition& lambda : partitions_of(n)) {
            for (long long q = 1; q <= max_q; ++q) {
                BigInt brute = multiplicity_brute(lambda, q, workers).value;
                BigInt closed = multiplicity_closed_form(lambda, q).value;
                if (brute != closed)
                    res.fail("paths disagree at lambda=" + lambda.str() + " q=" + std::to_string(q) +
                             ": brute=" + brute.get_str() + " closed=" + closed.get_str());
                else
                    res.pass();
            }
        }
    }
    return res;
}

SuiteResult verify_moments(int max_n, long long max_q) {
    SuiteResult res;
    res.suite = "moments";

    // plain cycle-count moments against enumeration, falling and power
    for (int n = 1; n <= max_n; ++n) {
        auto tally = powered_census(n, 1);
        long long nfact = 1;
        for (int i = 2; i <= n; ++i) nfact *= i;
        for (const MomentSpec& spec : specs_up_to_weight(std::min(max_n, n + 2))) {
            ExactScalar enumerated = census_moment(tally, nfact, spec, false);
            ExactScalar symbolic = power_moment(spec, n);
            if (enumerated == symbolic) res.pass();
            else res.fail("power_moment mismatch n=" + std::to_string(n) + " spec=" + spec_str(spec));

            std::vector<MomentTerm> falling_terms = spec.terms;
            ExactScalar fall_enum = census_moment(tally, nfact, spec, true);
            ExactScalar fall_sym = falling_moment(falling_terms, n);
            if (fall_enum == fall_sym) res.pass();
            else res.fail("falling_moment mismatch n=" + std::to_string(n) + " spec=" + spec_str(spec));

            // saturation inequality: the n-free product bounds every n
            ExactScalar bound(1);
            for (const auto& [k, m] : spec.terms) {
                ExactScalar term;
                for (long long s = 1; s <= m; ++s) term += ExactScalar(stirling2(m, s), int_pow(k, s));
                bound *= term;
            }
            if (symbolic <= bound) res.pass();
            else res.fail("saturation bound violated n=" + std::to_string(n) + " spec=" + spec_str(spec));
        }
    }

    // moments of root counts of pi^q against enumeration, every engine entry point
    for (int n = 1; n <= max_n; ++n) {
        long long nfact = 1;
        for (int i = 2; i <= n; ++i) nfact *= i;
        for (long long q = 1; q <= max_q; ++q) {
            auto tally = powered_census(n, q);
            for (const MomentSpec& spec : {MomentSpec({{1, 1}}), MomentSpec({{1, 2}}), MomentSpec({{1, 3}}),
                                           MomentSpec({{2, 1}}), MomentSpec({{2, 2}}), MomentSpec({{3, 1}}),
                                           MomentSpec({{1, 1}, {2, 1}}), MomentSpec({{1, 2}, {3, 1}})}) {
                ExactScalar enumerated = census_moment(tally, nfact, spec, false);
                ExactScalar symbolic = root_count_product_moment(spec, q, n);
                if (enumerated == symbolic) res.pass();
                else res.fail("root-count moment mismatch n=" + std::to_string(n) + " q=" + std::to_string(q) +
                              " spec=" + spec_str(spec));
            }

            // binom(c_1, 2) binom(c_2, 1) and the truncated sums, same census
            {
                BigInt num = 0;
                for (const auto& [type, mult] : tally) {
                    CycleType t = CycleType::from_partition(type);
                    num += binomial(big(t.count(1)), 2) * binomial(big(t.count(2)), 1) * big(mult);
                }
                std::vector<BinomialOrder> orders{{1, 2}, {2, 1}};
                if (binomial_count_moment(orders, q, n) == ExactScalar(num, big(nfact))) res.pass();
                else res.fail("binomial moment mismatch n=" + std::to_string(n) + " q=" + std::to_string(q));
            }
            for (long long r : {2LL, 3LL}) {
                for (long long delta : {1LL, 2LL}) {
                    BigInt num = 0;
                    for (const auto& [type, mult] : tally) {
                        CycleType t = CycleType::from_partition(type);
                        long long sum = 0;
                        for (long long d = 1; d <= r; ++d) sum += t.count(d);
                        num += int_pow(sum, delta) * big(mult);
                    }
                    if (truncated_sum_moment(r, delta, q, n) == ExactScalar(num, big(nfact))) res.pass();
                    else res.fail("truncated sum mismatch n=" + std::to_string(n) + " q=" + std::to_string(q) +
                                  " r=" + std::to_string(r) + " delta=" + std::to_string(delta));
                }
            }
        }
    }

    // divisor closed forms for the first two moments
    for (long long q = 1; q <= std::max<long long>(max_q, 100); ++q) {
        if (root_count_power_moment(1, q, q) == ExactScalar(divisor_sigma(0, q))) res.pass();
        else res.fail("first moment != sigma_0 at q=" + std::to_string(q));
        ExactScalar expected = ExactScalar(divisor_sigma(1, q)) +
                               ExactScalar(divisor_sigma(0, q) * divisor_sigma(0, q));
        if (root_count_power_moment(2, q, 2 * q) == expected) res.pass();
        else res.fail("second moment closed form failed at q=" + std::to_string(q));
    }

    return res;
}

SuiteResult verify_theorem(double threshold, long long q_max, int grid) {
    SuiteResult res;
    res.suite = "theorem";
    if (threshold <= 0) throw std::invalid_argument("verify_theorem: threshold must be positive");
    const ExactScalar exact_threshold = ExactScalar::from_double(threshold);

    std::vector<Partition> mus = {Partition({1}), Partition({2}), Partition({1, 1}),
                                  Partition({3}), Partition({2, 1}), Partition({1, 1, 1})};

    std::vector<long long> qs;
    for (int i = 0; i < grid; ++i) {
        double x = 2.0 * std::pow(static_cast<double>(q_max) / 2.0,
                                  grid == 1 ? 1.0 : static_cast<double>(i) / (grid - 1));
        long long q = std::llround(x);
        if (!qs.empty() && q <= qs.back()) q = qs.back() + 1;  // keep the grid strictly increasing
        qs.push_back(q);
    }

    for (const Partition& mu : mus) {
        const long long delta = mu.weight();
        for (long long q : qs) {
            const long long n = std::max(delta * q, delta + mu.first());
            BigInt exact = multiplicity_closed_form(lambda_from_mu(mu, n), q).value;
            AsymptoticEstimate est = multiplicity_asymptotic(mu, q);
            ExactScalar residual = (ExactScalar(exact) - est.main_term).abs();
            double k = (residual / est.error_scale).to_double();
            res.worst_constant = std::max(res.worst_constant, k);
            if (residual <= exact_threshold * est.error_scale) res.pass();
            else res.fail("envelope exceeded at mu=" + mu.str() + " q=" + std::to_string(q) +
                          " K=" + std::to_string(k));

            if (delta >= 2 && q >= 1000) {
                double ratio = ExactScalar(exact).to_double() / est.main_term.to_double();
                if (ratio >= 0.5 && ratio <= 2.0) res.pass();
                else res.fail("ratio out of [0.5,2] at mu=" + mu.str() + " q=" + std::to_string(q));
            }
        }

        // prime-q band: the ratio tightens to 1
        if (delta >= 2) {
            for (long long base : qs) {
                if (base < 10000) continue;
                long long p = next_prime_above(base);
                const long long n = delta * p;
                BigInt exact = multiplicity_closed_form(lambda_from_mu(mu, n), p).value;
                AsymptoticEstimate est = multiplicity_asymptotic(mu, p);
                double ratio = ExactScalar(exact).to_double() / est.main_term.to_double();
                if (ratio >= 0.9 && ratio <= 1.1) res.pass();
                else res.fail("prime ratio out of [0.9,1.1] at mu=" + mu.str() + " q=" + std::to_string(p));
            }
        }
    }

    // prime-q second-order residual: after subtracting both stated terms the
    // remainder stays within threshold * 3^delta q^{delta-3}
    for (long long q = 31; q <= 97; q = next_prime_above(q)) {
        for (long long delta = 3; delta <= 6; ++delta) {
            ExactScalar moment = root_count_power_moment(delta, q, delta * q);
            ExactScalar second(int_pow(q, delta - 2) * (big(delta) + int_pow(2, delta - 1) - 1));
            ExactScalar residual = (moment - ExactScalar(divisor_sigma(delta - 1, q)) - second).abs();
            ExactScalar scale(int_pow(3, delta) * int_pow(q, delta - 3));
            double k = (residual / scale).to_double();
            res.worst_constant = std::max(res.worst_constant, k);
            if (residual <= exact_threshold * scale) res.pass();
            else res.fail("second-order residual exceeded at q=" + std::to_string(q) +
                          " delta=" + std::to_string(delta) + " K=" + std::to_string(k));
        }
    }

    return res;
}

SuiteResult verify_stirling(int limit) {
    SuiteResult res;
    res.suite = "stirling";

    for (long long n = 1; n <= limit; ++n) {
        // {n brace 2} = 2^{n-1} - 1 and {n brace n-1} = C(n,2)
        if (stirling2(n, 2) == int_pow(2, n - 1) - 1) res.pass();
        else res.fail("{n,2} identity failed at n=" + std::to_string(n));
        if (n >= 2) {
            if (stirling2(n, n - 1) == binomial(n, 2)) res.pass();
            else res.fail("{n,n-1} identity failed at n=" + std::to_string(n));
        }

        // k! {n k} = k^n - sum_{j<k} k!/(k-j)! {n j}
        for (long long k = 1; k <= n; ++k) {
            BigInt rhs = int_pow(k, n);
            for (long long j = 1; j < k; ++j) rhs -= (factorial(k) / factorial(k - j)) * stirling2(n, j);
            if (factorial(k) * stirling2(n, k) == rhs) res.pass();
            else res.fail("second-kind recurrence failed at n=" + std::to_string(n) + " k=" + std::to_string(k));
        }

        // power <-> falling conversions evaluated at integer points
        auto p2f = power_to_falling(n);
        auto f2p = falling_to_power(n);
        for (long long x = 0; x <= n + 2; ++x) {
            BigInt xpow = int_pow(x, n);
            BigInt falling_sum = 0;
            for (long long k = 1; k <= n; ++k) {
                BigInt fk = 1;
                for (long long i = 0; i < k; ++i) fk *= big(x - i);
                falling_sum += p2f[k - 1] * fk;
            }
            BigInt fx = 1;
            for (long long i = 0; i < n; ++i) fx *= big(x - i);
            BigInt power_sum = 0;
            for (long long k = 1; k <= n; ++k) power_sum += f2p[k - 1] * int_pow(x, k);
            if (falling_sum == xpow && power_sum == fx) res.pass();
            else res.fail("conversion identity failed at n=" + std::to_string(n) + " x=" + std::to_string(x));
        }

        // first-kind bound [n k] <= (n-1)!/k! C(n, k-1)
        for (long long k = 1; k <= n; ++k) {
            ExactScalar lhs(stirling1(n, k));
            ExactScalar rhs = ExactScalar(factorial(n - 1), factorial(k)) * ExactScalar(binomial(n, k - 1));
            if (lhs <= rhs) res.pass();
            else res.fail("first-kind bound failed at n=" + std::to_string(n) + " k=" + std::to_string(k));
        }

        // second-kind bound {n s} <= s^n / s!
        for (long long s = 1; s <= n; ++s) {
            if (ExactScalar(stirling2(n, s)) <= ExactScalar(int_pow(s, n), factorial(s))) res.pass();
            else res.fail("second-kind bound failed at n=" + std::to_string(n) + " s=" + std::to_string(s));
        }
    }

    // the conversion matrices are mutually inverse
    for (long long n = 1; n <= limit; ++n) {
        for (long long j = 1; j <= n; ++j) {
            BigInt entry = 0;
            for (long long k = j; k <= n; ++k) {
                BigInt term = stirling2(n, k) * stirling1(k, j);
                if ((k - j) % 2 == 1) term = -term;
                entry += term;
            }
            if (entry == BigInt(n == j ? 1 : 0)) res.pass();
            else res.fail("inverse property failed at n=" + std::to_string(n) + " j=" + std::to_string(j));
        }
    }

    return res;
}

SuiteResult run_suite(const std::string& name, double threshold, int workers) {
    if (name == "scharf") return verify_scharf();
    if (name == "agreement") return verify_agreement(10, 12, workers);
    if (name == "moments") return verify_moments();
    if (name == "theorem") return verify_theorem(threshold);
    if (name == "stirling") return verify_stirling();
    throw std::invalid_argument("unknown suite '" + name + "' (expected scharf|agreement|moments|theorem|stirling)");
}

}  // namespace rootmult
