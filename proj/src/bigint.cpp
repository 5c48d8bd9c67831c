#include "ratsurf/bigint.hpp"

#include <ostream>
#include <stdexcept>
#include <vector>

namespace ratsurf {

namespace {

bool valid_integer_literal(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
}

}  // namespace

BigInt::BigInt(const std::string& decimal) {
    std::string s = decimal;
    if (!s.empty() && s.front() == '+') s.erase(s.begin());
    if (!valid_integer_literal(s)) {
        throw std::invalid_argument("invalid integer literal: '" + decimal + "'");
    }
    if (mpz_init_set_str(z_, s.c_str(), 10) != 0) {
        mpz_clear(z_);
        throw std::invalid_argument("invalid integer literal: '" + decimal + "'");
    }
}

BigInt BigInt::abs() const {
    BigInt r;
    mpz_abs(r.z_, z_);
    return r;
}

BigInt BigInt::negated() const {
    BigInt r;
    mpz_neg(r.z_, z_);
    return r;
}

std::string BigInt::to_string() const {
    std::vector<char> buf(mpz_sizeinbase(z_, 10) + 2);
    mpz_get_str(buf.data(), 10, z_);
    return std::string(buf.data());
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
    mpz_add(z_, z_, rhs.z_);
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) {
    mpz_sub(z_, z_, rhs.z_);
    return *this;
}

BigInt& BigInt::operator*=(const BigInt& rhs) {
    mpz_mul(z_, z_, rhs.z_);
    return *this;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_add(r.z_, a.z_, b.z_);
    return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_sub(r.z_, a.z_, b.z_);
    return r;
}

BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_mul(r.z_, a.z_, b.z_);
    return r;
}

BigInt operator-(const BigInt& a) { return a.negated(); }

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.z_, a.z_, b.z_);
    return r;
}

BigInt BigInt::lcm(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_lcm(r.z_, a.z_, b.z_);
    return r;
}

BigInt BigInt::div_exact(const BigInt& a, const BigInt& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    BigInt q, r;
    mpz_tdiv_qr(q.z_, r.z_, a.z_, b.z_);
    if (!r.is_zero()) throw std::domain_error("inexact integer division");
    return q;
}

BigInt BigInt::pow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.z_, base.z_, e);
    return r;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

}  // namespace ratsurf
