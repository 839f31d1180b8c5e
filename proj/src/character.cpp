#include "rootmult/character.hpp"

#include "rootmult/number_theory.hpp"

#include <algorithm>
#include <istream>
#include <mutex>
#include <ostream>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace rootmult {

namespace {

class CharacterMemo {
public:
    bool lookup(const std::string& key, BigInt& out) {
        std::shared_lock lock(mu_);
        auto it = table_.find(key);
        if (it == table_.end()) return false;
        out = it->second;
        return true;
    }

    void insert(const std::string& key, const BigInt& value) {
        std::unique_lock lock(mu_);
        table_.emplace(key, value);
    }

    void save(std::ostream& out) {
        std::shared_lock lock(mu_);
        for (const auto& [key, value] : table_) out << key << '\t' << value.get_str() << '\n';
    }

    void load(std::istream& in) {
        std::unique_lock lock(mu_);
        std::string line;
        while (std::getline(in, line)) {
            auto tab = line.find('\t');
            if (tab == std::string::npos) continue;
            try {
                table_.emplace(line.substr(0, tab), BigInt(line.substr(tab + 1)));
            } catch (const std::exception&) {
                continue;
            }
        }
    }

    void clear() {
        std::unique_lock lock(mu_);
        table_.clear();
    }

    std::size_t size() {
        std::shared_lock lock(mu_);
        return table_.size();
    }

private:
    std::unordered_map<std::string, BigInt> table_;
    std::shared_mutex mu_;
};

CharacterMemo& memo() {
    static CharacterMemo m;
    return m;
}

BigInt mn_recurse(const Partition& shape, const std::vector<int>& cycles, std::size_t idx) {
    if (shape.empty()) return BigInt(1);
    if (idx >= cycles.size()) throw std::logic_error("mn_character: cycle weight exhausted before the shape");
    std::string key = shape.str();
    key += '|';
    for (std::size_t i = idx; i < cycles.size(); ++i) {
        if (i > idx) key += ',';
        key += std::to_string(cycles[i]);
    }
    BigInt cached;
    if (memo().lookup(key, cached)) return cached;

    BigInt total = 0;
    for (const auto& removal : rim_hooks(shape, cycles[idx])) {
        BigInt sub = mn_recurse(removal.result, cycles, idx + 1);
        if (removal.height % 2 == 1) sub = -sub;
        total += sub;
    }
    memo().insert(key, total);
    return total;
}

BigInt hook_length_dimension(const Partition& mu) {
    const auto& parts = mu.parts();
    const int rows = mu.rows();
    std::vector<int> conj(mu.first() + 1, 0);
    for (int j = 1; j <= mu.first(); ++j)
        for (int i = 0; i < rows; ++i)
            if (parts[i] >= j) ++conj[j];
    BigInt hooks = 1;
    for (int i = 0; i < rows; ++i)
        for (int j = 1; j <= parts[i]; ++j) hooks *= big(parts[i] - j + conj[j] - i);
    return factorial(mu.weight()) / hooks;  // exact: hook products divide n!
}

BigInt rim_hook_sequence_recurse(const Partition& current, const Partition& target,
                                 std::span<const long long> lengths, std::size_t idx) {
    if (idx == lengths.size()) return BigInt(current == target ? 1 : 0);
    if (!current.contains(target)) return BigInt(0);
    BigInt total = 0;
    for (const auto& removal : rim_hooks(current, lengths[idx])) {
        BigInt sub = rim_hook_sequence_recurse(removal.result, target, lengths, idx + 1);
        if (removal.height % 2 == 1) sub = -sub;
        total += sub;
    }
    return total;
}

}  // namespace

CharacterValue mn_character(const Partition& lambda, const Partition& rho) {
    if (lambda.weight() != rho.weight())
        throw std::invalid_argument("mn_character: |lambda| != |rho|");
    return mn_recurse(lambda, rho.parts(), 0);
}

CharacterValue dimension(const Partition& mu) {
    BigInt from_hooks = hook_length_dimension(mu);
    std::vector<int> ones(mu.weight(), 1);
    BigInt from_rule = mn_character(mu, Partition(ones));
    if (from_hooks != from_rule)
        throw std::logic_error("dimension: hook length formula disagrees with the rim-hook recursion for " + mu.str());
    return from_hooks;
}

CharacterValue rim_hook_count_sequence(const Partition& mu, const Partition& mu_tilde,
                                       std::span<const long long> lengths) {
    if (!mu.contains(mu_tilde))
        throw std::invalid_argument("rim_hook_count: mu_tilde not contained in mu");
    long long total = 0;
    for (long long t : lengths) total += t;
    if (mu.weight() - mu_tilde.weight() != total)
        throw std::invalid_argument("rim_hook_count: hook lengths do not account for |mu| - |mu_tilde|");
    return rim_hook_sequence_recurse(mu, mu_tilde, lengths, 0);
}

CharacterValue rim_hook_count(const Partition& mu, const Partition& mu_tilde, const Partition& cycle_counts) {
    std::vector<long long> lengths(cycle_counts.parts().begin(), cycle_counts.parts().end());
    return rim_hook_count_sequence(mu, mu_tilde, lengths);
}

CharacterValue char_poly_eval(const Partition& mu, std::span<const long long> counts) {
    const long long delta = mu.weight();
    if (static_cast<long long>(counts.size()) < delta)
        throw std::invalid_argument("char_poly_eval: need the first |mu| cycle counts");
    BigInt total = 0;
    for (int t = 0; t <= mu.rows(); ++t) {
        Partition column(std::vector<int>(t, 1));
        for (const Partition& cls : partitions_of(delta - t)) {
            BigInt coeff = rim_hook_count(mu, column, cls);
            if (coeff == 0) continue;
            BigInt generic = 1;
            for (auto [len, mult] : cls.part_multiplicities())
                generic *= binomial(big(counts[len - 1]), mult);
            if (t % 2 == 1) generic = -generic;
            total += coeff * generic;
        }
    }
    return total;
}

void character_memo_save(std::ostream& out) { memo().save(out); }
void character_memo_load(std::istream& in) { memo().load(in); }
void character_memo_clear() { memo().clear(); }
std::size_t character_memo_size() { return memo().size(); }

}  // namespace rootmult
