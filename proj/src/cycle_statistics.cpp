#include "rootmult/cycle_statistics.hpp"

#include "rootmult/number_theory.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace rootmult {

CycleType CycleType::from_partition(const Partition& p) {
    CycleType t;
    t.n = p.weight();
    for (auto [len, mult] : p.part_multiplicities()) t.counts[len] = mult;
    return t;
}

Partition CycleType::to_partition() const {
    std::vector<int> parts;
    for (auto it = counts.rbegin(); it != counts.rend(); ++it)
        for (long long i = 0; i < it->second; ++i) parts.push_back(static_cast<int>(it->first));
    return Partition(std::move(parts));
}

void CycleType::validate() const {
    long long total = 0;
    for (auto [len, mult] : counts) {
        if (len < 1 || mult < 0) throw std::invalid_argument("CycleType: bad entry");
        total += len * mult;
    }
    if (total != n) throw std::invalid_argument("CycleType: counts do not sum to n");
}

MomentSpec::MomentSpec(std::vector<MomentTerm> t) : terms(std::move(t)) {
    std::set<long long> seen;
    for (const auto& term : terms) {
        if (term.k < 1) throw std::invalid_argument("MomentSpec: cycle lengths must be positive");
        if (term.m < 1) throw std::invalid_argument("MomentSpec: exponents must be positive");
        if (!seen.insert(term.k).second) throw std::invalid_argument("MomentSpec: cycle lengths must be distinct");
    }
}

CycleType power_cycle_type(const CycleType& t, long long q) {
    if (q < 1) throw std::invalid_argument("power_cycle_type: q must be positive");
    CycleType out;
    out.n = t.n;
    for (auto [k, c] : t.counts) {
        if (c == 0) continue;
        long long g = std::gcd(k, q);
        out.counts[k / g] += g * c;
    }
    return out;
}

std::vector<std::pair<long long, long long>> root_contributors(long long d, long long q, long long k_cap) {
    if (d < 1 || q < 1) throw std::invalid_argument("root_contributors: d and q must be positive");
    std::vector<std::pair<long long, long long>> out;
    for (long long e : divisors(q)) {
        if (e > k_cap / d) break;  // divisors ascend, so all later e overflow the cap too
        if (std::gcd(d, q / e) != 1) continue;
        out.emplace_back(d * e, e);
    }
    return out;
}

LinearForm root_count_form(long long d, long long q, long long k_cap) {
    LinearForm form;
    form.terms = root_contributors(d, q, k_cap);
    return form;
}

namespace {

// Sparse series over the falling-factorial weight sum k*s; expectations of
// monomials vanish exactly when this weight exceeds n.
using WeightSeries = std::map<long long, ExactScalar>;

void accumulate(WeightSeries& dst, long long u, const ExactScalar& v) {
    auto [it, inserted] = dst.try_emplace(u, v);
    if (!inserted) it->second += v;
}

void prune_zeros(WeightSeries& s) {
    for (auto it = s.begin(); it != s.end();)
        it = it->second.is_zero() ? s.erase(it) : std::next(it);
}

// Weight series of the mean contribution of one factor: apply the factor's
// polynomial-in-Y coefficients to the exponential-type expansion of the
// linear form Y over its variables.
WeightSeries factor_weight_series(const MomentFactor& f, long long n, bool track_weight) {
    const long long order = f.order;

    std::vector<ExactScalar> gamma(order + 1);
    if (order == 0) {
        gamma[0] = ExactScalar(1);
    } else if (f.is_binomial) {
        auto coeffs = falling_to_power(order);  // coefficients of Y^1..Y^order in (Y)_order
        ExactScalar inv_fact = ExactScalar(BigInt(1), factorial(order));
        for (long long d = 1; d <= order; ++d) gamma[d] = ExactScalar(coeffs[d - 1]) * inv_fact;
    } else {
        gamma[order] = ExactScalar(1);
    }

    // T[e] holds the t^e coefficient of prod over variables of
    //   sum_e (a_k t)^e / e! * sum_s {e brace s} k^{-s} u^{k s}.
    std::vector<WeightSeries> table(order + 1);
    table[0][0] = ExactScalar(1);
    for (auto [k, a] : f.form.terms) {
        if (a == 0) continue;
        std::vector<std::vector<std::pair<long long, ExactScalar>>> phi(order + 1);
        ExactScalar coeff_pow(1);
        for (long long e = 1; e <= order; ++e) {
            coeff_pow *= ExactScalar(a);
            ExactScalar scale = coeff_pow / ExactScalar(factorial(e));
            for (long long s = 1; s <= e; ++s) {
                long long weight = track_weight ? k * s : 0;
                if (track_weight && weight > n) continue;
                phi[e].emplace_back(weight, scale * ExactScalar(stirling2(e, s), int_pow(k, s)));
            }
        }
        for (long long d = order; d >= 1; --d) {
            for (long long e = 1; e <= d; ++e) {
                if (table[d - e].empty() || phi[e].empty()) continue;
                for (const auto& [u0, c0] : table[d - e])
                    for (const auto& [du, ce] : phi[e]) {
                        long long u = u0 + du;
                        if (track_weight && u > n) continue;
                        accumulate(table[d], u, c0 * ce);
                    }
            }
        }
    }

    WeightSeries out;
    for (long long d = 0; d <= order; ++d) {
        if (gamma[d].is_zero()) continue;
        ExactScalar scale = gamma[d] * ExactScalar(factorial(d));
        for (const auto& [u, c] : table[d]) accumulate(out, u, scale * c);
    }
    prune_zeros(out);
    return out;
}

std::string moment_key(std::span<const MomentFactor> factors, long long n, bool track_weight) {
    std::string key;
    for (const auto& f : factors) {
        key += f.is_binomial ? 'B' : 'P';
        key += std::to_string(f.order);
        key += '[';
        for (auto [k, a] : f.form.terms) {
            key += std::to_string(k);
            key += ':';
            key += std::to_string(a);
            key += ',';
        }
        key += ']';
    }
    key += track_weight ? '#' + std::to_string(n) : std::string("#sat");
    return key;
}

std::mutex g_moment_mutex;
std::unordered_map<std::string, ExactScalar>& moment_memo() {
    static std::unordered_map<std::string, ExactScalar> memo;
    return memo;
}

}  // namespace

ExactScalar mixed_moment(std::span<const MomentFactor> factors, long long n) {
    if (n < 0) throw std::invalid_argument("mixed_moment: n must be nonnegative");

    std::set<long long> seen;
    long long max_weight = 0;
    std::size_t term_count = 0;
    for (const auto& f : factors) {
        if (f.order < 0) throw std::invalid_argument("mixed_moment: negative order");
        long long max_k = 0;
        for (auto [k, a] : f.form.terms) {
            if (k < 1) throw std::invalid_argument("mixed_moment: cycle lengths must be positive");
            if (!seen.insert(k).second)
                throw std::invalid_argument("mixed_moment: cycle length appears in two factors");
            ++term_count;
            if (a != 0) max_k = std::max(max_k, k);
        }
        max_weight += f.order * max_k;
    }
    const bool track_weight = max_weight > n;

    const bool use_memo = term_count <= 256;
    std::string key;
    if (use_memo) {
        key = moment_key(factors, n, track_weight);
        std::lock_guard lock(g_moment_mutex);
        auto it = moment_memo().find(key);
        if (it != moment_memo().end()) return it->second;
    }

    WeightSeries product;
    product[0] = ExactScalar(1);
    for (const auto& f : factors) {
        WeightSeries w = factor_weight_series(f, n, track_weight);
        WeightSeries next;
        for (const auto& [u0, c0] : product)
            for (const auto& [u1, c1] : w) {
                long long u = u0 + u1;
                if (track_weight && u > n) continue;
                accumulate(next, u, c0 * c1);
            }
        product = std::move(next);
        if (product.empty()) break;
    }

    ExactScalar result;
    for (const auto& [u, c] : product) result += c;

    if (use_memo) {
        std::lock_guard lock(g_moment_mutex);
        moment_memo().emplace(std::move(key), result);
    }
    return result;
}

ExactScalar falling_moment(std::span<const MomentTerm> spec, long long n) {
    if (n < 0) throw std::invalid_argument("falling_moment: n must be nonnegative");
    std::set<long long> seen;
    long long weight = 0;
    ExactScalar value(1);
    for (const auto& [k, s] : spec) {
        if (k < 1 || s < 1) throw std::invalid_argument("falling_moment: entries must be positive");
        if (!seen.insert(k).second) throw std::invalid_argument("falling_moment: cycle lengths must be distinct");
        weight += k * s;
        value *= ExactScalar(BigInt(1), int_pow(k, s));
    }
    if (weight > n) return ExactScalar(0);
    return value;
}

ExactScalar power_moment(const MomentSpec& spec, long long n) {
    std::vector<MomentFactor> factors;
    factors.reserve(spec.terms.size());
    for (const auto& [k, m] : spec.terms)
        factors.push_back({LinearForm{{{k, 1}}}, m, false});
    return mixed_moment(factors, n);
}

ExactScalar root_count_product_moment(const MomentSpec& spec, long long q, long long n) {
    if (q < 1) throw std::invalid_argument("root_count_product_moment: q must be positive");
    std::vector<MomentFactor> factors;
    factors.reserve(spec.terms.size());
    for (const auto& [d, m] : spec.terms)
        factors.push_back({root_count_form(d, q, n), m, false});
    return mixed_moment(factors, n);
}

ExactScalar root_count_power_moment(long long delta, long long q, long long n) {
    if (delta < 1) throw std::invalid_argument("root_count_power_moment: delta must be positive");
    return root_count_product_moment(MomentSpec({{1, delta}}), q, n);
}

ExactScalar binomial_count_moment(std::span<const BinomialOrder> orders, long long q, long long n) {
    if (q < 1) throw std::invalid_argument("binomial_count_moment: q must be positive");
    std::set<long long> seen;
    std::vector<MomentFactor> factors;
    for (const auto& [d, s] : orders) {
        if (d < 1) throw std::invalid_argument("binomial_count_moment: d must be positive");
        if (s < 0) throw std::invalid_argument("binomial_count_moment: order must be nonnegative");
        if (!seen.insert(d).second) throw std::invalid_argument("binomial_count_moment: d must be distinct");
        if (s == 0) continue;  // binom(x, 0) = 1
        factors.push_back({root_count_form(d, q, n), s, true});
    }
    return mixed_moment(factors, n);
}

ExactScalar binomial_sum_count_moment(long long r, long long s, long long q, long long n) {
    if (r < 1) throw std::invalid_argument("binomial_sum_count_moment: r must be positive");
    if (s < 0) throw std::invalid_argument("binomial_sum_count_moment: order must be nonnegative");
    if (s == 0) return ExactScalar(1);
    LinearForm form;
    for (long long d = 1; d <= std::min(r, n); ++d) {
        auto part = root_count_form(d, q, n);
        form.terms.insert(form.terms.end(), part.terms.begin(), part.terms.end());
    }
    MomentFactor factor{std::move(form), s, true};
    return mixed_moment(std::span(&factor, 1), n);
}

ExactScalar truncated_sum_moment(long long r, long long delta, long long q, long long n) {
    if (r < 1 || delta < 1) throw std::invalid_argument("truncated_sum_moment: r and delta must be positive");
    LinearForm form;
    for (long long d = 1; d <= std::min(r, n); ++d) {
        auto part = root_count_form(d, q, n);
        form.terms.insert(form.terms.end(), part.terms.begin(), part.terms.end());
    }
    MomentFactor factor{std::move(form), delta, false};
    return mixed_moment(std::span(&factor, 1), n);
}

}  // namespace rootmult
