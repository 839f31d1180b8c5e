#pragma once

#include "rootmult/cycle_statistics.hpp"

#include <cstdint>

namespace rootmult {

// splitmix64: the project-wide deterministic random stream. Substreams for
// trial i are derived by mixing the seed with the trial counter, so a trial's
// draws never depend on which worker runs it.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t state) : state_(state) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased uniform draw from {1, ..., m} by rejection.
    std::uint64_t uniform(std::uint64_t m);

private:
    std::uint64_t state_;
};

SplitMix64 trial_stream(std::uint64_t seed, std::uint64_t trial);

struct SampleReport {
    double estimate = 0.0;
    double standard_error = 0.0;
    long long trials = 0;
    std::uint64_t seed = 0;
};

// Cycle type distributed exactly as that of a uniform random permutation of
// n symbols: the cycle containing the smallest unplaced symbol has length
// uniform on {1..remaining}, independently at each step. Never materializes
// an n-element array, so n up to 10^6 is cheap.
CycleType random_cycle_type(long long n, SplitMix64& stream);

// Monte Carlo estimate of the mean of prod (c_{k_j}(pi^q))^{m_j} over uniform
// pi in S_n. Tallies are exact integers merged deterministically; the report
// is bit-for-bit reproducible from (spec, n, q, trials, seed) for any worker
// count. trials = 1 reports standard_error 0.
SampleReport empirical_moment(const MomentSpec& spec, long long n, long long q,
                              long long trials, std::uint64_t seed, int workers = 0);

}  // namespace rootmult
