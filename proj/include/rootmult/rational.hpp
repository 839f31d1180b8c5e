#pragma once

#include "rootmult/bigint.hpp"

#include <compare>
#include <stdexcept>
#include <string>

namespace rootmult {

// Exact rational scalar, always in lowest terms with a positive denominator.
// Every mean and intermediate sum in the moment machinery is one of these;
// there is no floating point anywhere on the exact paths.
class ExactScalar {
public:
    ExactScalar() : v_(0) {}
    ExactScalar(long long value) : v_(static_cast<long>(value)) {}
    ExactScalar(const BigInt& value) : v_(value) {}
    // accept unevaluated gmp integer expressions like a*b + c directly
    template <class U>
    ExactScalar(const __gmp_expr<mpz_t, U>& value) : v_(BigInt(value)) {}
    ExactScalar(const BigInt& num, const BigInt& den) : v_(num, den) {
        if (sgn(den) == 0) throw std::invalid_argument("ExactScalar: zero denominator");
        v_.canonicalize();
    }
    ExactScalar(long long num, long long den)
        : ExactScalar(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))) {}

    BigInt numerator() const { return BigInt(v_.get_num()); }
    BigInt denominator() const { return BigInt(v_.get_den()); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    // Collapses to a BigInt; the caller asserts integrality.
    BigInt to_integer() const {
        if (!is_integer()) throw std::logic_error("ExactScalar: not an integer: " + str());
        return numerator();
    }

    double to_double() const { return v_.get_d(); }

    ExactScalar operator-() const { return ExactScalar(mpq_class(-v_)); }
    ExactScalar abs() const { return sgn(v_) < 0 ? -*this : *this; }

    friend ExactScalar operator+(const ExactScalar& a, const ExactScalar& b) { return ExactScalar(mpq_class(a.v_ + b.v_)); }
    friend ExactScalar operator-(const ExactScalar& a, const ExactScalar& b) { return ExactScalar(mpq_class(a.v_ - b.v_)); }
    friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) { return ExactScalar(mpq_class(a.v_ * b.v_)); }
    friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) {
        if (b.is_zero()) throw std::domain_error("ExactScalar: division by zero");
        return ExactScalar(mpq_class(a.v_ / b.v_));
    }
    ExactScalar& operator+=(const ExactScalar& o) { v_ += o.v_; return *this; }
    ExactScalar& operator-=(const ExactScalar& o) { v_ -= o.v_; return *this; }
    ExactScalar& operator*=(const ExactScalar& o) { v_ *= o.v_; return *this; }
    ExactScalar& operator/=(const ExactScalar& o) { *this = *this / o; return *this; }

    friend bool operator==(const ExactScalar& a, const ExactScalar& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
    friend std::strong_ordering operator<=>(const ExactScalar& a, const ExactScalar& b) {
        int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    static ExactScalar pow(const ExactScalar& base, long long exp) {
        if (exp < 0) throw std::invalid_argument("ExactScalar::pow: negative exponent");
        return ExactScalar(int_pow(base.numerator(), exp), int_pow(base.denominator(), exp));
    }

    // Exact value of the double (doubles are dyadic rationals).
    static ExactScalar from_double(double d) { return ExactScalar(mpq_class(d)); }

    // "p" when integral, otherwise "p/q".
    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

private:
    explicit ExactScalar(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;  // gmp keeps results of arithmetic canonical
};

}  // namespace rootmult
