#include "rootmult/number_theory.hpp"

#include <algorithm>
#include <atomic>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <tuple>

namespace rootmult {

std::vector<long long> divisors(long long q) {
    if (q < 1) throw std::invalid_argument("divisors: q must be positive");
    std::vector<long long> small, large;
    for (long long d = 1; d * d <= q; ++d) {
        if (q % d == 0) {
            small.push_back(d);
            if (d != q / d) large.push_back(q / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

BigInt divisor_sigma(long long alpha, long long q) {
    if (alpha < 0) throw std::invalid_argument("divisor_sigma: alpha must be nonnegative");
    BigInt total = 0;
    for (long long d : divisors(q)) total += int_pow(d, alpha);
    return total;
}

BigInt odd_divisor_count(long long q) {
    BigInt count = 0;
    for (long long d : divisors(q))
        if (d % 2 == 1) ++count;
    return count;
}

namespace {

std::atomic<int> g_initial_rows{64};

class StirlingTable {
public:
    explicit StirlingTable(bool first_kind) : first_kind_(first_kind) {}

    BigInt get(long long n, long long k) {
        if (n < 0 || k < 0) throw std::invalid_argument("stirling: negative index");
        if (k > n) return BigInt(0);
        {
            std::shared_lock lock(mu_);
            if (n < static_cast<long long>(rows_.size())) return rows_[n][k];
        }
        std::unique_lock lock(mu_);
        grow(std::max(n, static_cast<long long>(g_initial_rows.load())));
        return rows_[n][k];
    }

    void save(std::ostream& out) {
        std::shared_lock lock(mu_);
        const char* tag = first_kind_ ? "s1" : "s2";
        for (std::size_t n = 0; n < rows_.size(); ++n)
            for (std::size_t k = 0; k < rows_[n].size(); ++k)
                out << tag << ':' << n << ':' << k << '\t' << rows_[n][k].get_str() << '\n';
    }

    void load(const std::map<std::pair<long long, long long>, BigInt>& entries) {
        std::unique_lock lock(mu_);
        std::vector<std::vector<BigInt>> rows;
        for (long long n = 0;; ++n) {
            std::vector<BigInt> row;
            bool complete = true;
            for (long long k = 0; k <= n; ++k) {
                auto it = entries.find({n, k});
                if (it == entries.end()) { complete = false; break; }
                row.push_back(it->second);
            }
            if (!complete || !row_valid(rows, row, n)) break;
            rows.push_back(std::move(row));
        }
        if (rows.size() > rows_.size()) rows_ = std::move(rows);
    }

private:
    // A cached row is accepted only if it satisfies the defining recurrence
    // against the row before it; anything else truncates the load.
    bool row_valid(const std::vector<std::vector<BigInt>>& prior, const std::vector<BigInt>& row, long long n) const {
        if (n == 0) return row.size() == 1 && row[0] == 1;
        if (row[0] != 0) return false;
        for (long long k = 1; k <= n; ++k) {
            const BigInt& same = k < n ? prior[n - 1][k] : row[0];
            const BigInt& up = prior[n - 1][k - 1];
            BigInt expected = first_kind_ ? BigInt(big(n - 1) * same + up) : BigInt(big(k) * same + up);
            if (row[k] != expected) return false;
        }
        return true;
    }

    // caller holds the unique lock
    void grow(long long upto) {
        if (rows_.empty()) rows_.push_back({BigInt(1)});
        for (long long n = static_cast<long long>(rows_.size()); n <= upto; ++n) {
            std::vector<BigInt> row(n + 1);
            row[0] = 0;
            for (long long k = 1; k <= n; ++k) {
                const BigInt& same = k < n ? rows_[n - 1][k] : row[0];  // zero beyond the triangle
                const BigInt& up = rows_[n - 1][k - 1];
                row[k] = first_kind_ ? BigInt(big(n - 1) * same + up) : BigInt(big(k) * same + up);
            }
            rows_.push_back(std::move(row));
        }
    }

    std::vector<std::vector<BigInt>> rows_;
    std::shared_mutex mu_;
    bool first_kind_;
};

StirlingTable& first_kind_table() {
    static StirlingTable t(true);
    return t;
}

StirlingTable& second_kind_table() {
    static StirlingTable t(false);
    return t;
}

}  // namespace

BigInt stirling2(long long n, long long k) { return second_kind_table().get(n, k); }

BigInt stirling1(long long n, long long k) { return first_kind_table().get(n, k); }

std::vector<BigInt> power_to_falling(long long n) {
    if (n < 1) throw std::invalid_argument("power_to_falling: n must be positive");
    std::vector<BigInt> coeffs;
    coeffs.reserve(n);
    for (long long k = 1; k <= n; ++k) coeffs.push_back(stirling2(n, k));
    return coeffs;
}

std::vector<BigInt> falling_to_power(long long n) {
    if (n < 1) throw std::invalid_argument("falling_to_power: n must be positive");
    std::vector<BigInt> coeffs;
    coeffs.reserve(n);
    for (long long k = 1; k <= n; ++k) {
        BigInt c = stirling1(n, k);
        if ((n - k) % 2 == 1) c = -c;
        coeffs.push_back(c);
    }
    return coeffs;
}

ExactScalar harmonic(long long r) {
    if (r < 1) throw std::invalid_argument("harmonic: r must be positive");
    ExactScalar sum;
    for (long long d = 1; d <= r; ++d) sum += ExactScalar(1, d);
    return sum;
}

void stirling_set_initial_rows(int rows) {
    if (rows < 1) throw std::invalid_argument("stirling_set_initial_rows: rows must be positive");
    g_initial_rows.store(rows);
}

void stirling_cache_save(std::ostream& out) {
    first_kind_table().save(out);
    second_kind_table().save(out);
}

void stirling_cache_load(std::istream& in) {
    std::map<std::pair<long long, long long>, BigInt> s1, s2;
    std::string line;
    while (std::getline(in, line)) {
        auto tab = line.find('\t');
        if (tab == std::string::npos) continue;
        std::string key = line.substr(0, tab);
        std::string value = line.substr(tab + 1);
        auto c1 = key.find(':');
        auto c2 = key.find(':', c1 == std::string::npos ? std::string::npos : c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos) continue;
        std::string kind = key.substr(0, c1);
        if (kind != "s1" && kind != "s2") continue;
        try {
            long long n = std::stoll(key.substr(c1 + 1, c2 - c1 - 1));
            long long k = std::stoll(key.substr(c2 + 1));
            BigInt v(value);
            if (n < 0 || k < 0 || k > n) continue;
            (kind == "s1" ? s1 : s2)[{n, k}] = std::move(v);
        } catch (const std::exception&) {
            continue;  // malformed line, skip
        }
    }
    first_kind_table().load(s1);
    second_kind_table().load(s2);
}

}  // namespace rootmult
