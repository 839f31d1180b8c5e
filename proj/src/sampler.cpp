#include "rootmult/sampler.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

namespace rootmult {

std::uint64_t SplitMix64::uniform(std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("uniform: empty range");
    // reject draws from the tail that would bias the modulus
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % m;
    for (;;) {
        std::uint64_t x = next();
        if (x < limit) return x % m + 1;
    }
}

SplitMix64 trial_stream(std::uint64_t seed, std::uint64_t trial) {
    SplitMix64 mixer(seed ^ (trial * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL));
    return SplitMix64(mixer.next());
}

CycleType random_cycle_type(long long n, SplitMix64& stream) {
    if (n < 1) throw std::invalid_argument("random_cycle_type: n must be positive");
    CycleType t;
    t.n = n;
    long long remaining = n;
    while (remaining > 0) {
        long long len = static_cast<long long>(stream.uniform(static_cast<std::uint64_t>(remaining)));
        ++t.counts[len];
        remaining -= len;
    }
    return t;
}

namespace {

int resolve_workers(int workers) {
    if (workers > 0) return workers;
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

BigInt observe(const MomentSpec& spec, long long n, long long q, std::uint64_t seed, long long trial) {
    SplitMix64 stream = trial_stream(seed, static_cast<std::uint64_t>(trial));
    CycleType type = random_cycle_type(n, stream);
    CycleType powered = power_cycle_type(type, q);
    BigInt x = 1;
    for (const auto& [k, m] : spec.terms) {
        long long c = powered.count(k);
        if (c == 0) return BigInt(0);
        x *= int_pow(c, m);
    }
    return x;
}

}  // namespace

SampleReport empirical_moment(const MomentSpec& spec, long long n, long long q,
                              long long trials, std::uint64_t seed, int workers) {
    if (trials < 1) throw std::invalid_argument("empirical_moment: trials must be positive");
    if (n < 1) throw std::invalid_argument("empirical_moment: n must be positive");
    if (q < 1) throw std::invalid_argument("empirical_moment: q must be positive");

    int nthreads = resolve_workers(workers);
    if (static_cast<long long>(nthreads) > trials) nthreads = static_cast<int>(trials);

    std::vector<BigInt> sums(nthreads), squares(nthreads);
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) {
        pool.emplace_back([&, t]() {
            BigInt sum = 0, sq = 0;
            for (long long i = t; i < trials; i += nthreads) {
                BigInt x = observe(spec, n, q, seed, i);
                sum += x;
                sq += x * x;
            }
            sums[t] = sum;
            squares[t] = sq;
        });
    }
    for (auto& t : pool) t.join();

    BigInt sum = 0, sq = 0;
    for (int t = 0; t < nthreads; ++t) {
        sum += sums[t];
        sq += squares[t];
    }

    SampleReport report;
    report.trials = trials;
    report.seed = seed;
    ExactScalar mean(sum, big(trials));
    report.estimate = mean.to_double();
    if (trials > 1) {
        // unbiased sample variance of the mean: (sum x^2 - (sum x)^2/T) / (T-1) / T
        ExactScalar var = (ExactScalar(sq) - ExactScalar(sum * sum, big(trials))) /
                          ExactScalar(BigInt(big(trials - 1) * big(trials)));
        report.standard_error = std::sqrt(var.to_double());
    }
    return report;
}

}  // namespace rootmult
