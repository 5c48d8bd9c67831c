#pragma once

#include <gmp.h>

#include <iosfwd>
#include <string>

#include "ratsurf/bigint.hpp"

namespace ratsurf {

/// Exact rational number over arbitrary-precision integers.
///
/// Always canonical: denominator > 0, gcd(|num|, den) = 1, zero is 0/1.
/// Wraps GMP's mpq_t.
class BigRational {
public:
    BigRational() { mpq_init(q_); }
    BigRational(long v) {
        mpq_init(q_);
        mpq_set_si(q_, v, 1);
    }
    BigRational(long num, long den);
    BigRational(const BigInt& num, const BigInt& den);
    explicit BigRational(const BigInt& v);

    BigRational(const BigRational& other) {
        mpq_init(q_);
        mpq_set(q_, other.q_);
    }
    BigRational(BigRational&& other) noexcept {
        mpq_init(q_);
        mpq_swap(q_, other.q_);
    }
    BigRational& operator=(BigRational other) noexcept {
        mpq_swap(q_, other.q_);
        return *this;
    }
    ~BigRational() { mpq_clear(q_); }

    /// Parses "a/b" or "a"; optional sign on a, b omitted when 1.
    static BigRational parse(const std::string& text);
    /// "a/b", or "a" when the denominator is 1.
    std::string to_string() const;

    BigInt num() const;
    BigInt den() const;

    bool is_zero() const { return mpq_sgn(q_) == 0; }
    bool is_integer() const;
    int sign() const { return mpq_sgn(q_); }
    BigRational abs() const;
    BigRational negated() const;
    /// Throws std::domain_error on zero.
    BigRational reciprocal() const;
    /// Integer exponent; negative exponents invert (throws std::domain_error on zero base).
    BigRational pow(long e) const;

    BigRational& operator+=(const BigRational& rhs);
    BigRational& operator-=(const BigRational& rhs);
    BigRational& operator*=(const BigRational& rhs);
    BigRational& operator/=(const BigRational& rhs);

    friend BigRational operator+(const BigRational& a, const BigRational& b);
    friend BigRational operator-(const BigRational& a, const BigRational& b);
    friend BigRational operator*(const BigRational& a, const BigRational& b);
    friend BigRational operator/(const BigRational& a, const BigRational& b);
    friend BigRational operator-(const BigRational& a);

    friend bool operator==(const BigRational& a, const BigRational& b) {
        return mpq_equal(a.q_, b.q_) != 0;
    }
    friend bool operator!=(const BigRational& a, const BigRational& b) { return !(a == b); }
    friend bool operator<(const BigRational& a, const BigRational& b) {
        return mpq_cmp(a.q_, b.q_) < 0;
    }
    friend bool operator<=(const BigRational& a, const BigRational& b) {
        return mpq_cmp(a.q_, b.q_) <= 0;
    }
    friend bool operator>(const BigRational& a, const BigRational& b) {
        return mpq_cmp(a.q_, b.q_) > 0;
    }
    friend bool operator>=(const BigRational& a, const BigRational& b) {
        return mpq_cmp(a.q_, b.q_) >= 0;
    }

    mpq_srcptr raw() const { return q_; }

private:
    mpq_t q_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& v);

}  // namespace ratsurf
