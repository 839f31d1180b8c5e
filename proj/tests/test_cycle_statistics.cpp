#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracle.hpp"
#include "rootmult/cycle_statistics.hpp"
#include "rootmult/number_theory.hpp"

#include <random>

using namespace rootmult;

namespace {

ExactScalar exact_of(const mpq_class& q) { return ExactScalar(BigInt(q.get_num()), BigInt(q.get_den())); }

CycleType type_of(std::initializer_list<int> parts) {
    return CycleType::from_partition(Partition(std::vector<int>(parts)));
}

}  // namespace

TEST_CASE("power_cycle_type on known cases") {
    CycleType six = type_of({6});
    CycleType powered = power_cycle_type(six, 4);
    CHECK(powered.count(3) == 2);
    CHECK(powered.n == 6);

    CycleType mixed = type_of({4, 2});
    CycleType squared = power_cycle_type(mixed, 2);
    CHECK(squared.count(2) == 2);
    CHECK(squared.count(1) == 2);

    for (const Partition& p : partitions_of(7)) {
        CycleType t = CycleType::from_partition(p);
        CHECK(power_cycle_type(t, 1).to_partition() == p);
    }
}

TEST_CASE("power_cycle_type preserves n and composes") {
    std::mt19937_64 rng(20240811);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + static_cast<int>(rng() % 30);
        // random cycle type by greedy chopping
        std::vector<int> parts;
        int left = n;
        while (left > 0) {
            int piece = 1 + static_cast<int>(rng() % left);
            parts.push_back(piece);
            left -= piece;
        }
        std::sort(parts.rbegin(), parts.rend());
        CycleType t = CycleType::from_partition(Partition(parts));

        long long a = 1 + static_cast<long long>(rng() % 20);
        long long b = 1 + static_cast<long long>(rng() % 20);
        CycleType once = power_cycle_type(power_cycle_type(t, a), b);
        CycleType direct = power_cycle_type(t, a * b);
        once.validate();
        CHECK(once.n == t.n);
        CHECK(once.counts == direct.counts);
    }
}

TEST_CASE("power_cycle_type agrees with direct permutation powering") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 1 + static_cast<int>(rng() % 10);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        long long q = 1 + static_cast<long long>(rng() % 50);

        auto expected = oracle::cycle_type(oracle::perm_power(perm, q));
        CycleType t = CycleType::from_partition(Partition(oracle::cycle_type(perm)));
        auto produced = power_cycle_type(t, q).to_partition();
        CHECK(produced == Partition(expected));
    }
}

TEST_CASE("root_contributors characterization") {
    auto d1 = root_contributors(1, 6, 100);
    REQUIRE(d1.size() == 4);
    for (auto [k, g] : d1) CHECK(k == g);  // k | q exactly when d = 1
    CHECK(d1[3].first == 6);

    // q=2: a 2-cycle squares to fixed points, so k=2 feeds d=1, not d=2
    auto d2 = root_contributors(2, 2, 100);
    REQUIRE(d2.size() == 1);
    CHECK(d2[0] == std::pair<long long, long long>{4, 2});

    auto d5 = root_contributors(5, 1, 100);
    REQUIRE(d5.size() == 1);
    CHECK(d5[0] == std::pair<long long, long long>{5, 1});

    // definitional check of the index set, brute force over k
    for (long long q : {1, 2, 6, 12, 30}) {
        for (long long d = 1; d <= 10; ++d) {
            auto got = root_contributors(d, q, 200);
            std::vector<std::pair<long long, long long>> expected;
            for (long long k = 1; k <= 200; ++k)
                if (k / std::gcd(k, q) == d) expected.emplace_back(k, std::gcd(k, q));
            CHECK(got == expected);
        }
    }
}

TEST_CASE("root_contributors drives the exact cycle-count identity") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 12);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        long long q = 1 + static_cast<long long>(rng() % 30);
        CycleType t = CycleType::from_partition(Partition(oracle::cycle_type(perm)));
        CycleType powered = power_cycle_type(t, q);
        for (long long d = 1; d <= n; ++d) {
            long long sum = 0;
            for (auto [k, g] : root_contributors(d, q, n)) sum += g * t.count(k);
            CHECK(sum == powered.count(d));
        }
    }
}

TEST_CASE("falling_moment closed form") {
    std::vector<MomentTerm> single{{1, 1}};
    CHECK(falling_moment(single, 1) == ExactScalar(1));
    CHECK(falling_moment(single, 9) == ExactScalar(1));

    std::vector<MomentTerm> two{{2, 1}};
    CHECK(falling_moment(two, 1) == ExactScalar(0));
    CHECK(falling_moment(two, 2) == ExactScalar(1, 2));

    std::vector<MomentTerm> mixed{{2, 2}, {3, 1}};
    CHECK(falling_moment(mixed, 7) == ExactScalar(1, 12));
    CHECK(falling_moment(mixed, 6) == ExactScalar(0));

    // exhaustive S_7 cross-check
    auto tally = oracle::powered_census(7, 1);
    CHECK(exact_of(oracle::census_mean(tally, {{2, 2}, {3, 1}}, true)) == ExactScalar(1, 12));

    CHECK_THROWS_AS(falling_moment(std::vector<MomentTerm>{{2, 1}, {2, 1}}, 5), std::invalid_argument);
}

TEST_CASE("power_moment frozen values") {
    CHECK(power_moment(MomentSpec({{1, 2}}), 2) == ExactScalar(2));  // (2^2 + 0^2)/2
    CHECK(power_moment(MomentSpec({{1, 2}}), 8) == ExactScalar(2));
    CHECK(power_moment(MomentSpec({{2, 2}}), 4) == ExactScalar(3, 4));
    for (long long k = 1; k <= 8; ++k) CHECK(power_moment(MomentSpec({{k, 1}}), k) == ExactScalar(1, k));
}

TEST_CASE("power and falling moments match exhaustive enumeration") {
    for (int n = 1; n <= 7; ++n) {
        auto tally = oracle::powered_census(n, 1);
        for (int w = 1; w <= 8; ++w) {
            for (const Partition& shape : partitions_of(w)) {
                std::vector<MomentTerm> terms;
                std::vector<std::pair<long long, long long>> pairs;
                for (auto [k, m] : shape.part_multiplicities()) {
                    terms.push_back({k, m});
                    pairs.emplace_back(k, m);
                }
                CHECK(power_moment(MomentSpec(terms), n) == exact_of(oracle::census_mean(tally, pairs, false)));
                CHECK(falling_moment(terms, n) == exact_of(oracle::census_mean(tally, pairs, true)));

                // saturated product bounds the truncated mean from above
                ExactScalar bound(1);
                for (auto [k, m] : pairs) {
                    ExactScalar factor;
                    for (long long s = 1; s <= m; ++s) factor += ExactScalar(stirling2(m, s), int_pow(k, s));
                    bound *= factor;
                }
                CHECK(power_moment(MomentSpec(terms), n) <= bound);
            }
        }
    }
}

TEST_CASE("root count power moments: divisor closed forms") {
    CHECK(root_count_power_moment(1, 2, 2) == ExactScalar(2));
    CHECK(root_count_power_moment(2, 2, 4) == ExactScalar(7));
    for (long long q = 1; q <= 60; ++q) {
        CHECK(root_count_power_moment(1, q, q) == ExactScalar(divisor_sigma(0, q)));
        CHECK(root_count_power_moment(2, q, 2 * q) ==
              ExactScalar(divisor_sigma(1, q) + divisor_sigma(0, q) * divisor_sigma(0, q)));
    }
}

TEST_CASE("root count moments match exhaustive enumeration below saturation") {
    // includes n < delta*q, where the falling-factorial cutoffs are active
    CHECK(root_count_power_moment(3, 2, 3) == exact_of(oracle::census_mean(oracle::powered_census(3, 2), {{1, 3}})));
    for (int n = 1; n <= 6; ++n)
        for (long long q = 1; q <= 10; ++q) {
            auto tally = oracle::powered_census(n, q);
            for (long long delta = 1; delta <= 3; ++delta)
                CHECK(root_count_power_moment(delta, q, n) == exact_of(oracle::census_mean(tally, {{1, delta}})));
            CHECK(root_count_product_moment(MomentSpec({{2, 1}}), q, n) ==
                  exact_of(oracle::census_mean(tally, {{2, 1}})));
            CHECK(root_count_product_moment(MomentSpec({{1, 1}, {2, 2}}), q, n) ==
                  exact_of(oracle::census_mean(tally, {{1, 1}, {2, 2}})));
        }
}

TEST_CASE("binomial count moments") {
    std::vector<BinomialOrder> first{{1, 1}};
    CHECK(binomial_count_moment(first, 6, 6) == ExactScalar(4));  // sigma_0(6)

    std::vector<BinomialOrder> pair_q2{{1, 2}};
    CHECK(binomial_count_moment(pair_q2, 2, 4) == ExactScalar(5, 2));  // (E X^2 - E X)/2 = (7-2)/2

    std::vector<BinomialOrder> zeros{{1, 0}, {3, 0}};
    CHECK(binomial_count_moment(zeros, 12, 30) == ExactScalar(1));

    // against enumeration, binomials evaluated per permutation
    for (int n = 1; n <= 6; ++n)
        for (long long q = 1; q <= 6; ++q) {
            auto tally = oracle::powered_census(n, q);
            for (long long s1 = 0; s1 <= 2; ++s1)
                for (long long s2 = 0; s2 <= 1; ++s2) {
                    mpq_class mean = 0;
                    long long total = 0;
                    for (const auto& [key, mult] : tally) {
                        total += mult;
                        mpz_class c1(static_cast<long>(oracle::count_of(key, 1)));
                        mpz_class c2(static_cast<long>(oracle::count_of(key, 2)));
                        mpz_class b1, b2;
                        mpz_bin_ui(b1.get_mpz_t(), c1.get_mpz_t(), static_cast<unsigned long>(s1));
                        mpz_bin_ui(b2.get_mpz_t(), c2.get_mpz_t(), static_cast<unsigned long>(s2));
                        mean += mpq_class(mpz_class(b1 * b2) * static_cast<long>(mult));
                    }
                    mean /= mpz_class(static_cast<long>(total));
                    mean.canonicalize();
                    std::vector<BinomialOrder> orders{{1, s1}, {2, s2}};
                    CHECK(binomial_count_moment(orders, q, n) == exact_of(mean));
                }
        }
}

TEST_CASE("truncated sum moments") {
    for (long long q = 1; q <= 8; ++q)
        for (long long delta = 1; delta <= 3; ++delta)
            CHECK(truncated_sum_moment(1, delta, q, 12) == root_count_power_moment(delta, q, 12));

    // mean number of cycles is the harmonic sum
    for (int n = 1; n <= 9; ++n) CHECK(truncated_sum_moment(n, 1, 1, n) == harmonic(n));

    // exhaustive S_4 and S_5 cross-checks
    auto tally4 = oracle::powered_census(4, 2);
    mpq_class direct = 0;
    for (const auto& [key, mult] : tally4)
        direct += mpq_class(static_cast<long>((oracle::count_of(key, 1) + oracle::count_of(key, 2)) * mult));
    direct /= 24;
    direct.canonicalize();
    CHECK(truncated_sum_moment(2, 1, 2, 4) == exact_of(direct));

    auto tally5 = oracle::powered_census(5, 1);
    mpq_class cycles2 = 0;
    for (const auto& [key, mult] : tally5) {
        long long c = static_cast<long long>(key.size());  // all cycle lengths <= 5 counted
        cycles2 += mpq_class(static_cast<long>(c * c * mult));
    }
    cycles2 /= 120;
    cycles2.canonicalize();
    CHECK(truncated_sum_moment(5, 2, 1, 5) == exact_of(cycles2));
}

TEST_CASE("binomial sums over truncated ranges") {
    // delta = 1 aggregate is binom(., 0) = 1
    CHECK(binomial_sum_count_moment(2, 0, 7, 20) == ExactScalar(1));

    auto tally = oracle::powered_census(5, 2);
    mpq_class direct = 0;
    for (const auto& [key, mult] : tally) {
        mpz_class c(static_cast<long>(oracle::count_of(key, 1) + oracle::count_of(key, 2)));
        mpz_class b;
        mpz_bin_ui(b.get_mpz_t(), c.get_mpz_t(), 2);
        direct += mpq_class(b * static_cast<long>(mult));
    }
    direct /= 120;
    direct.canonicalize();
    CHECK(binomial_sum_count_moment(2, 2, 2, 5) == exact_of(direct));
}

TEST_CASE("truncated sum moments stay inside the harmonic-weighted envelopes") {
    // monitored constant 10 against sigma_0 H_r, sigma_0^2 H_r^2 + sigma_1 H_r,
    // q^2 H_r, q^3 H_r^2 for delta up to log2(q), the range the envelopes cover
    const ExactScalar cap(10);
    for (long long q : {2, 3, 4, 6, 12, 16, 30, 64, 100}) {
        ExactScalar s0(divisor_sigma(0, q)), s1(divisor_sigma(1, q));
        long long max_delta = 0;
        while ((1LL << (max_delta + 1)) <= q) ++max_delta;
        for (long long r : {2, 5, 10}) {
            ExactScalar hr = harmonic(r);
            for (long long delta = 1; delta <= std::min<long long>(4, max_delta); ++delta) {
                ExactScalar value = truncated_sum_moment(r, delta, q, delta * q);
                ExactScalar envelope;
                switch (delta) {
                    case 1: envelope = s0 * hr; break;
                    case 2: envelope = s0 * s0 * hr * hr + s1 * hr; break;
                    case 3: envelope = ExactScalar(int_pow(q, 2)) * hr; break;
                    default: envelope = ExactScalar(int_pow(q, 3)) * hr * hr; break;
                }
                CHECK(value <= cap * envelope);
            }
        }
    }
}

TEST_CASE("moment engine rejects colliding cycle lengths") {
    std::vector<MomentFactor> factors;
    factors.push_back({LinearForm{{{2, 1}}}, 1, false});
    factors.push_back({LinearForm{{{2, 1}}}, 1, false});
    CHECK_THROWS_AS(mixed_moment(factors, 10), std::invalid_argument);
    CHECK_THROWS_AS(MomentSpec({{2, 1}, {2, 1}}), std::invalid_argument);
}

TEST_CASE("prime-q second moment refinement") {
    // residual after both stated terms stays within 10 * 3^delta q^{delta-3}
    for (long long q : {31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97}) {
        for (long long delta = 3; delta <= 6; ++delta) {
            ExactScalar moment = root_count_power_moment(delta, q, delta * q);
            ExactScalar expected = ExactScalar(divisor_sigma(delta - 1, q)) +
                                   ExactScalar(int_pow(q, delta - 2) * (big(delta) + int_pow(2, delta - 1) - 1));
            ExactScalar residual = (moment - expected).abs();
            ExactScalar envelope(int_pow(3, delta) * int_pow(q, delta - 3));
            CHECK(residual <= ExactScalar(10) * envelope);
        }
    }
}
