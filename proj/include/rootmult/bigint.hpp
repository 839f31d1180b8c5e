#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace rootmult {

// Arbitrary-precision integer. All counts, character values and multiplicities
// live in this type; nothing in the library rounds or overflows.
using BigInt = mpz_class;

inline BigInt factorial(long long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

// n choose k for big n and machine k; zero when k < 0.
inline BigInt binomial(const BigInt& n, long long k) {
    if (k < 0) return BigInt(0);
    BigInt r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

inline BigInt binomial(long long n, long long k) { return binomial(BigInt(static_cast<long>(n)), k); }

inline BigInt int_pow(const BigInt& base, long long exp) {
    if (exp < 0) throw std::invalid_argument("int_pow: negative exponent");
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
    return r;
}

inline BigInt int_pow(long long base, long long exp) { return int_pow(BigInt(static_cast<long>(base)), exp); }

inline BigInt big(long long v) { return BigInt(static_cast<long>(v)); }

inline std::string to_string(const BigInt& v) { return v.get_str(); }

}  // namespace rootmult
