#pragma once

// Brute-force oracles shared by the test suites. Everything here works by
// direct enumeration over permutations, fillings or growth strings, and
// never calls the library paths under test.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

using CycleKey = std::vector<int>;  // cycle lengths, descending

// p(n) by the parts-bounded recurrence, independent of the generator.
inline long long partition_count(int n) {
    // table[m][k] = partitions of m into parts <= k
    std::vector<std::vector<long long>> table(n + 1, std::vector<long long>(n + 1, 0));
    for (int k = 0; k <= n; ++k) table[0][k] = 1;
    for (int m = 1; m <= n; ++m)
        for (int k = 1; k <= n; ++k)
            table[m][k] = table[m][k - 1] + (m >= k ? table[m - k][k] : 0);
    return table[n][n];
}

inline CycleKey cycle_type(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    CycleKey lens;
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
    return lens;
}

inline std::vector<int> perm_power(const std::vector<int>& perm, long long e) {
    const int n = static_cast<int>(perm.size());
    std::vector<int> acc(n), base = perm;
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
}

// Tally of the cycle types of pi^q over every pi in S_n.
inline std::map<CycleKey, long long> powered_census(int n, long long q) {
    std::map<CycleKey, long long> tally;
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        ++tally[cycle_type(q == 1 ? sigma : perm_power(sigma, q))];
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return tally;
}

inline long long count_of(const CycleKey& key, int len) {
    return std::count(key.begin(), key.end(), len);
}

// Mean over the census of prod c_{k_j}^{m_j} (or falling factorials of the
// same), as an exact rational.
inline mpq_class census_mean(const std::map<CycleKey, long long>& tally,
                             const std::vector<std::pair<long long, long long>>& spec, bool falling = false) {
    mpz_class num = 0, total = 0;
    for (const auto& [key, mult] : tally) {
        total += mpz_class(static_cast<long>(mult));
        mpz_class value = 1;
        for (auto [k, m] : spec) {
            long long c = count_of(key, static_cast<int>(k));
            mpz_class factor = 1;
            if (falling) {
                for (long long i = 0; i < m; ++i) factor *= mpz_class(static_cast<long>(c - i));
            } else {
                mpz_class base(static_cast<long>(c));
                mpz_pow_ui(factor.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(m));
            }
            value *= factor;
            if (value == 0) break;
        }
        num += value * mpz_class(static_cast<long>(mult));
    }
    mpq_class mean(num, total);
    mean.canonicalize();
    return mean;
}

// Number of q-th roots landing in each class, per element of the class.
inline std::map<CycleKey, long long> root_counts(int n, long long q) {
    std::map<CycleKey, long long> landed = powered_census(n, q);
    // census counts sigma by the class of sigma^q; divide by the class size
    std::map<CycleKey, long long> class_sizes;
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        ++class_sizes[cycle_type(sigma)];
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    std::map<CycleKey, long long> out;
    for (const auto& [key, size] : class_sizes) {
        auto it = landed.find(key);
        long long total = it == landed.end() ? 0 : it->second;
        out[key] = total / size;  // r_q is a class function, so this divides
    }
    return out;
}

// Standard Young tableaux of the given shape, by checking every filling.
inline long long syt_count(const std::vector<int>& shape) {
    int total = 0;
    for (int row : shape) total += row;
    if (total == 0) return 1;
    std::vector<int> cell_row, cell_col;
    for (int r = 0; r < static_cast<int>(shape.size()); ++r)
        for (int c = 0; c < shape[r]; ++c) {
            cell_row.push_back(r);
            cell_col.push_back(c);
        }
    std::vector<int> filling(total);
    std::iota(filling.begin(), filling.end(), 0);
    long long count = 0;
    do {
        bool ok = true;
        for (int a = 0; a < total && ok; ++a)
            for (int b = 0; b < total && ok; ++b) {
                if (cell_row[a] == cell_row[b] && cell_col[a] + 1 == cell_col[b] && filling[a] > filling[b]) ok = false;
                if (cell_col[a] == cell_col[b] && cell_row[a] + 1 == cell_row[b] && filling[a] > filling[b]) ok = false;
            }
        if (ok) ++count;
    } while (std::next_permutation(filling.begin(), filling.end()));
    return count;
}

// {n brace k} by enumerating restricted growth strings.
inline long long set_partition_count(int n, int k) {
    if (n == 0) return k == 0 ? 1 : 0;
    long long count = 0;
    std::vector<int> rgs(n, 0);
    for (;;) {
        int blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
        if (blocks == k) ++count;
        // next restricted growth string
        int i = n - 1;
        while (i > 0) {
            int cap = *std::max_element(rgs.begin(), rgs.begin() + i) + 1;
            if (rgs[i] < cap) break;
            --i;
        }
        if (i == 0) break;
        ++rgs[i];
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
    }
    return count;
}

// [n brack k] by tallying cycle counts over all of S_n.
inline long long cycle_arrangement_count(int n, int k) {
    long long count = 0;
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        if (static_cast<int>(cycle_type(sigma).size()) == k) ++count;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return count;
}

}  // namespace oracle
