#include "rootmult/partition.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace rootmult {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i]) throw std::invalid_argument("Partition: parts must be weakly decreasing");
        weight_ += parts_[i];
    }
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw std::invalid_argument("Partition: cannot parse part '" + std::string(tok) + "'");
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
        if (pos == text.size()) throw std::invalid_argument("Partition: trailing comma");
    }
    return Partition(std::move(parts));
}

bool Partition::contains(const Partition& inner) const {
    if (inner.rows() > rows()) return false;
    for (int i = 0; i < inner.rows(); ++i)
        if (inner.parts_[i] > parts_[i]) return false;
    return true;
}

std::vector<std::pair<int, int>> Partition::part_multiplicities() const {
    std::vector<std::pair<int, int>> out;
    for (int v : parts_) {
        if (!out.empty() && out.back().first == v) {
            ++out.back().second;
        } else {
            out.emplace_back(v, 1);
        }
    }
    return out;
}

Partition Partition::tail() const {
    if (parts_.empty()) return Partition();
    return Partition(std::vector<int>(parts_.begin() + 1, parts_.end()));
}

std::string Partition::str() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

void for_each_partition(long long n, const std::function<void(const Partition&)>& fn) {
    if (n < 0) throw std::invalid_argument("for_each_partition: n must be nonnegative");
    if (n == 0) {
        fn(Partition());
        return;
    }
    std::vector<int> cur{static_cast<int>(n)};
    for (;;) {
        fn(Partition(cur));
        // Next in decreasing lexicographic order: decrement the last part
        // greater than one, then re-spread the freed weight greedily.
        int i = static_cast<int>(cur.size()) - 1;
        while (i >= 0 && cur[i] == 1) --i;
        if (i < 0) return;
        long long total = cur[i] + (static_cast<long long>(cur.size()) - 1 - i);
        int h = cur[i] - 1;
        cur.resize(i);
        while (total > 0) {
            int next = static_cast<int>(std::min<long long>(h, total));
            cur.push_back(next);
            total -= next;
        }
    }
}

std::vector<Partition> partitions_of(long long n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

Partition remove_tail(const Partition& lambda) {
    if (lambda.empty()) throw std::invalid_argument("remove_tail: empty partition");
    return lambda.tail();
}

ClassData class_data(const Partition& cycle_type) {
    BigInt z = 1;
    for (auto [len, mult] : cycle_type.part_multiplicities()) {
        z *= int_pow(len, mult);
        z *= factorial(mult);
    }
    BigInt nfact = factorial(cycle_type.weight());
    ClassData data;
    data.cycle_type = cycle_type;
    data.centralizer_order = z;
    data.class_size = nfact / z;  // exact: z divides n!
    return data;
}

std::vector<RimHookRemoval> rim_hooks(const Partition& mu, long long length) {
    if (length < 1) throw std::invalid_argument("rim_hooks: length must be positive");
    std::vector<RimHookRemoval> out;
    const auto& parts = mu.parts();
    const int rows = mu.rows();
    if (rows == 0) return out;

    // First-column displacements ("beta numbers"): beta_i = mu_i + rows-1-i,
    // all distinct. Removing a rim hook of the given length moves one bead
    // down by exactly that amount onto a free slot; the height is the number
    // of beads strictly in between.
    std::vector<long long> beta(rows);
    for (int i = 0; i < rows; ++i) beta[i] = parts[i] + (rows - 1 - i);

    for (int i = 0; i < rows; ++i) {
        long long target = beta[i] - length;
        if (target < 0) continue;
        bool occupied = false;
        int height = 0;
        for (int j = 0; j < rows; ++j) {
            if (j == i) continue;
            if (beta[j] == target) { occupied = true; break; }
            if (beta[j] > target && beta[j] < beta[i]) ++height;
        }
        if (occupied) continue;

        std::vector<long long> nb = beta;
        nb[i] = target;
        std::sort(nb.begin(), nb.end(), std::greater<>());
        std::vector<int> new_parts;
        for (int j = 0; j < rows; ++j) {
            long long part = nb[j] - (rows - 1 - j);
            if (part > 0) new_parts.push_back(static_cast<int>(part));
        }
        out.push_back({Partition(std::move(new_parts)), height});
    }
    return out;
}

}  // namespace rootmult
