#pragma once

#include "rootmult/bigint.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace rootmult {

// Weakly decreasing sequence of positive parts. Immutable value type,
// usable as a lookup key; the empty partition (weight 0) is first class.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // Parses "5,2,1"; "" is the empty partition.
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    long long weight() const { return weight_; }
    bool empty() const { return parts_.empty(); }
    int first() const { return parts_.empty() ? 0 : parts_.front(); }

    // Containment order: inner fits inside this row by row.
    bool contains(const Partition& inner) const;

    // Multiplicity of each part value, as (value, count) with values decreasing.
    std::vector<std::pair<int, int>> part_multiplicities() const;

    // Everything after the first part.
    Partition tail() const;

    std::string str() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    long long weight_ = 0;
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const {
        std::size_t h = 0x9e3779b97f4a7c15ULL;
        for (int v : p.parts()) h = h * 1099511628211ULL + static_cast<std::size_t>(v) + 1;
        return h;
    }
};

// Conjugacy-class bookkeeping for S_n: z = prod i^{c_i} c_i! and n!/z.
struct ClassData {
    Partition cycle_type;
    BigInt centralizer_order;
    BigInt class_size;
};

// Calls fn for every partition of n in decreasing lexicographic order.
void for_each_partition(long long n, const std::function<void(const Partition&)>& fn);

// All partitions of n, decreasing lexicographic: (4),(3,1),(2,2),(2,1,1),(1,1,1,1).
std::vector<Partition> partitions_of(long long n);

// (lambda_2, ..., lambda_l); rejects the empty partition.
Partition remove_tail(const Partition& lambda);

ClassData class_data(const Partition& cycle_type);

struct RimHookRemoval {
    Partition result;
    int height;  // rows spanned minus one, so the removal sign is (-1)^height
};

// Every partition reachable from mu by deleting one rim hook of the given
// length, each with that hook's height. Empty when no such hook exists.
std::vector<RimHookRemoval> rim_hooks(const Partition& mu, long long length);

}  // namespace rootmult
