#pragma once

#include <string>
#include <vector>

namespace rootmult {

// Outcome of one verification suite: counted checks, failures with capped
// detail, and the worst monitored constant where the suite tracks one.
struct SuiteResult {
    std::string suite;
    long long checks = 0;
    long long failures = 0;
    double worst_constant = 0.0;
    std::vector<std::string> notes;

    bool ok() const { return failures == 0; }
    void fail(const std::string& note);
    void pass() { ++checks; }
};

// Both exact paths produce non-negative integers on the full grid.
SuiteResult verify_scharf(int max_n = 8, long long max_q = 12);

// Exact equality of the brute and closed-form paths on the full grid.
SuiteResult verify_agreement(int max_n = 10, long long max_q = 12, int workers = 0);

// Symbolic cycle-count moments against exhaustive enumeration, the divisor
// closed forms for low moments of c_1(pi^q), and the saturation inequality.
SuiteResult verify_moments(int max_n = 8, long long max_q = 12);

// Envelope and ratio behaviour of the main term across a log-spaced q grid,
// plus the prime-q second-order residual probe. The monitored constant is
// reported and compared against `threshold` (the universal constants of the
// asymptotics are observed, never asserted as theorems).
SuiteResult verify_theorem(double threshold = 10.0, long long q_max = 100000, int grid = 30);

// Stirling identities, conversion inverses, and both bounds up to `limit`.
SuiteResult verify_stirling(int limit = 30);

SuiteResult run_suite(const std::string& name, double threshold, int workers);

}  // namespace rootmult
