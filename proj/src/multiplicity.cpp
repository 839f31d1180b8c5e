#include "rootmult/multiplicity.hpp"

#include "rootmult/number_theory.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <thread>
#include <vector>

namespace rootmult {

namespace {

using Clock = std::chrono::steady_clock;

BigInt assert_nonnegative_integer(const ExactScalar& value, const std::string& label, long long q) {
    if (!value.is_integer())
        throw internal_consistency_error("multiplicity not integral for " + label +
                                         " q=" + std::to_string(q) + ": " + value.str());
    BigInt v = value.to_integer();
    if (sgn(v) < 0)
        throw internal_consistency_error("multiplicity negative for " + label +
                                         " q=" + std::to_string(q) + ": " + value.str());
    return v;
}

int resolve_workers(int workers) {
    if (workers > 0) return workers;
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

}  // namespace

std::string method_name(Method m) {
    switch (m) {
        case Method::brute: return "brute";
        case Method::closed_form: return "closed_form";
        case Method::asymptotic_main: return "asymptotic";
    }
    return "?";
}

Partition lambda_from_mu(const Partition& mu, long long n) {
    long long head = n - mu.weight();
    if (head < mu.first() || head < 1)
        throw std::invalid_argument("lambda_from_mu: need n - |mu| >= max(mu_1, 1), got n=" + std::to_string(n) +
                                    " mu=" + mu.str());
    std::vector<int> parts{static_cast<int>(head)};
    parts.insert(parts.end(), mu.parts().begin(), mu.parts().end());
    return Partition(std::move(parts));
}

MultiplicityResult multiplicity_brute(const Partition& lambda, long long q, int workers) {
    if (lambda.empty()) throw std::invalid_argument("multiplicity_brute: lambda must be nonempty");
    if (q < 1) throw std::invalid_argument("multiplicity_brute: q must be positive");
    auto start = Clock::now();

    MultiplicityResult res;
    res.lambda = lambda;
    res.q = q;
    res.method = Method::brute;

    if (lambda.rows() == 1) {  // trivial character: every class contributes 1
        res.value = 1;
        res.elapsed = Clock::now() - start;
        return res;
    }

    const long long n = lambda.weight();
    std::vector<Partition> classes = partitions_of(n);
    std::vector<BigInt> terms(classes.size());

    std::atomic<std::size_t> cursor{0};
    auto work = [&]() {
        for (;;) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= classes.size()) return;
            ClassData data = class_data(classes[i]);
            Partition powered = power_cycle_type(CycleType::from_partition(classes[i]), q).to_partition();
            terms[i] = data.class_size * mn_character(lambda, powered);
        }
    };

    int nthreads = std::min<int>(resolve_workers(workers), static_cast<int>(classes.size()));
    if (nthreads <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    // fixed reduction order: by class index
    BigInt total = 0;
    for (const BigInt& t : terms) total += t;

    res.value = assert_nonnegative_integer(ExactScalar(total, factorial(n)), "lambda=" + lambda.str(), q);
    res.elapsed = Clock::now() - start;
    return res;
}

MultiplicityResult multiplicity_closed_form(const Partition& mu, long long n, long long q) {
    if (q < 1) throw std::invalid_argument("multiplicity_closed_form: q must be positive");
    const long long delta = mu.weight();
    if (n - delta < mu.first() || n - delta < 1)
        throw std::invalid_argument("multiplicity_closed_form: need n - |mu| >= max(mu_1, 1)");
    auto start = Clock::now();

    MultiplicityResult res;
    if (n - delta <= std::numeric_limits<int>::max()) res.lambda = lambda_from_mu(mu, n);
    res.q = q;
    res.method = Method::closed_form;

    if (delta == 0) {
        res.value = 1;
        res.elapsed = Clock::now() - start;
        return res;
    }

    ExactScalar total;
    for (int t = 0; t <= mu.rows(); ++t) {
        Partition column(std::vector<int>(t, 1));
        for (const Partition& cls : partitions_of(delta - t)) {
            BigInt signed_count = rim_hook_count(mu, column, cls);
            if (signed_count == 0) continue;
            std::vector<BinomialOrder> orders;
            for (auto [len, mult] : cls.part_multiplicities()) orders.push_back({len, mult});
            ExactScalar mean = binomial_count_moment(orders, q, n);
            if (t % 2 == 1) signed_count = -signed_count;
            total += ExactScalar(signed_count) * mean;
        }
    }

    res.value = assert_nonnegative_integer(total, "mu=" + mu.str() + " n=" + std::to_string(n), q);
    res.elapsed = Clock::now() - start;
    return res;
}

MultiplicityResult multiplicity_closed_form(const Partition& lambda, long long q) {
    if (lambda.empty()) throw std::invalid_argument("multiplicity_closed_form: lambda must be nonempty");
    MultiplicityResult res = multiplicity_closed_form(lambda.tail(), lambda.weight(), q);
    res.lambda = lambda;
    return res;
}

AsymptoticEstimate multiplicity_asymptotic(const Partition& mu, long long q) {
    const long long delta = mu.weight();
    if (delta < 1)
        throw std::invalid_argument("multiplicity_asymptotic: mu must be nonempty (one-row multiplicities are exactly 1)");
    if (q < 1) throw std::invalid_argument("multiplicity_asymptotic: q must be positive");

    AsymptoticEstimate est;
    est.delta = delta;
    est.q = q;
    est.delta_in_range = static_cast<double>(delta) <= std::log(static_cast<double>(q)) / std::log(2.0);

    const BigInt dim = dimension(mu);
    est.main_term = ExactScalar(dim * divisor_sigma(delta - 1, q), factorial(delta));

    switch (delta) {
        case 1:
            est.error_scale = ExactScalar(1);
            break;
        case 2:
            est.error_scale = ExactScalar(BigInt(divisor_sigma(0, q) * divisor_sigma(0, q)));
            break;
        case 3:
            est.error_scale = ExactScalar(BigInt(divisor_sigma(0, q) * divisor_sigma(1, q)));
            break;
        default: {
            BigInt envelope = int_pow(q, delta - 2) * (big(delta) * divisor_sigma(0, q) + int_pow(2, delta));
            est.error_scale = ExactScalar(dim * envelope, factorial(delta));
            break;
        }
    }
    return est;
}

ExactScalar error_term_bound(const Partition& mu, long long q, long long n) {
    const long long delta = mu.weight();
    if (delta < 1) throw std::invalid_argument("error_term_bound: mu must be nonempty");
    if (q < 1 || n < 0) throw std::invalid_argument("error_term_bound: bad q or n");
    ExactScalar total;
    for (long long j = 1; j <= delta; ++j)
        total += binomial_sum_count_moment(j + 1, delta - j, q, n);
    return total;
}

std::map<Partition, BigInt> brute_force_root_counts(int n, long long q) {
    if (n < 1 || n > 8) throw std::invalid_argument("brute_force_root_counts: n must be in 1..8");
    if (q < 1) throw std::invalid_argument("brute_force_root_counts: q must be positive");

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

    auto permutation_power = [n](std::vector<int> base, long long e) {
        std::vector<int> acc(n);
        std::iota(acc.begin(), acc.end(), 0);
        while (e > 0) {
            if (e & 1) {
                std::vector<int> next(n);
                for (int i = 0; i < n; ++i) next[i] = base[acc[i]];
                acc = std::move(next);
            }
            e >>= 1;
            if (e) {
                std::vector<int> sq(n);
                for (int i = 0; i < n; ++i) sq[i] = base[base[i]];
                base = std::move(sq);
            }
        }
        return acc;
    };

    std::map<Partition, BigInt> totals;  // class of sigma^q -> number of sigma landing there
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        totals[cycle_type_of(permutation_power(sigma, q))] += 1;
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    std::map<Partition, BigInt> out;
    for (const Partition& cls : partitions_of(n)) {
        BigInt landed = 0;
        if (auto it = totals.find(cls); it != totals.end()) landed = it->second;
        ClassData data = class_data(cls);
        if (landed % data.class_size != 0)
            throw internal_consistency_error("root counts not constant on class " + cls.str());
        out[cls] = landed / data.class_size;
    }
    return out;
}

}  // namespace rootmult
