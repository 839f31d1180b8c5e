#pragma once

#include "rootmult/bigint.hpp"
#include "rootmult/partition.hpp"

#include <cstddef>
#include <iosfwd>
#include <span>

namespace rootmult {

// Symmetric-group characters take rational-integer values.
using CharacterValue = BigInt;

// Irreducible character chi_lambda evaluated at the class of cycle type rho,
// by recursive rim-hook stripping of the largest remaining cycle. Memoized
// process-wide; rejects |lambda| != |rho|.
CharacterValue mn_character(const Partition& lambda, const Partition& rho);

// chi_mu(1), via the hook length formula cross-checked against the rim-hook
// recursion at the identity class. Always positive.
CharacterValue dimension(const Partition& mu);

// Signed count of complete rim-hook removal sequences from mu down to
// mu_tilde whose hook lengths realize the parts of cycle_counts, processed
// in weakly decreasing length order. Rejects mu_tilde not contained in mu
// and weight mismatches.
CharacterValue rim_hook_count(const Partition& mu, const Partition& mu_tilde, const Partition& cycle_counts);

// Same count with the hook lengths processed in the given order (the result
// does not depend on the order; tests assert this rather than assume it).
CharacterValue rim_hook_count_sequence(const Partition& mu, const Partition& mu_tilde,
                                       std::span<const long long> lengths);

// chi_lambda(pi) for lambda = (n - |mu|, mu), computed from the first |mu|
// cycle counts of pi alone: counts[i] is the number of (i+1)-cycles. Valid
// whenever n - |mu| >= mu_1 so that lambda is a partition.
CharacterValue char_poly_eval(const Partition& mu, std::span<const long long> counts);

// Persistence of the character memo table: one "lambda|rho<TAB>value" line
// per entry, partitions comma-serialized.
void character_memo_save(std::ostream& out);
void character_memo_load(std::istream& in);
void character_memo_clear();
std::size_t character_memo_size();

}  // namespace rootmult
