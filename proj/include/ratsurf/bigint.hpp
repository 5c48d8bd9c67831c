#pragma once

#include <gmp.h>

#include <iosfwd>
#include <string>

namespace ratsurf {

/// Arbitrary-precision integer. Value-semantic wrapper around GMP's mpz_t.
class BigInt {
public:
    BigInt() { mpz_init(z_); }
    BigInt(long v) { mpz_init_set_si(z_, v); }
    explicit BigInt(const std::string& decimal);

    BigInt(const BigInt& other) { mpz_init_set(z_, other.z_); }
    BigInt(BigInt&& other) noexcept {
        mpz_init(z_);
        mpz_swap(z_, other.z_);
    }
    BigInt& operator=(BigInt other) noexcept {
        mpz_swap(z_, other.z_);
        return *this;
    }
    ~BigInt() { mpz_clear(z_); }

    bool is_zero() const { return mpz_sgn(z_) == 0; }
    int sign() const { return mpz_sgn(z_); }
    BigInt abs() const;
    BigInt negated() const;

    std::string to_string() const;

    BigInt& operator+=(const BigInt& rhs);
    BigInt& operator-=(const BigInt& rhs);
    BigInt& operator*=(const BigInt& rhs);

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a);

    friend bool operator==(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) < 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) <= 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) > 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) >= 0; }

    /// Nonnegative greatest common divisor.
    static BigInt gcd(const BigInt& a, const BigInt& b);
    /// Nonnegative least common multiple.
    static BigInt lcm(const BigInt& a, const BigInt& b);
    /// Quotient of an exact division; throws std::domain_error if it does not divide.
    static BigInt div_exact(const BigInt& a, const BigInt& b);
    static BigInt pow(const BigInt& base, unsigned long e);

    /// Raw GMP handle, for the arithmetic kernels in this library.
    mpz_srcptr raw() const { return z_; }
    mpz_ptr raw() { return z_; }

private:
    mpz_t z_;
};

std::ostream& operator<<(std::ostream& os, const BigInt& v);

}  // namespace ratsurf
