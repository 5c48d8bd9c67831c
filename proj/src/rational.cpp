#include "ratsurf/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace ratsurf {

BigRational::BigRational(long num, long den) : BigRational(BigInt(num), BigInt(den)) {}

BigRational::BigRational(const BigInt& num, const BigInt& den) {
    if (den.is_zero()) throw std::invalid_argument("denominator must be nonzero");
    mpq_init(q_);
    mpz_set(mpq_numref(q_), num.raw());
    mpz_set(mpq_denref(q_), den.raw());
    mpq_canonicalize(q_);
}

BigRational::BigRational(const BigInt& v) {
    mpq_init(q_);
    mpz_set(mpq_numref(q_), v.raw());
}

BigRational BigRational::parse(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text) {
        if (c != ' ' && c != '\t') s.push_back(c);
    }
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return BigRational(BigInt(s));
        }
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den.is_zero()) throw std::invalid_argument("zero denominator");
        return BigRational(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("invalid rational literal: '" + text + "'");
    }
}

std::string BigRational::to_string() const {
    BigInt d = den();
    if (d == BigInt(1)) return num().to_string();
    return num().to_string() + "/" + d.to_string();
}

BigInt BigRational::num() const {
    BigInt r;
    mpz_set(r.raw(), mpq_numref(q_));
    return r;
}

BigInt BigRational::den() const {
    BigInt r;
    mpz_set(r.raw(), mpq_denref(q_));
    return r;
}

bool BigRational::is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }

BigRational BigRational::abs() const {
    BigRational r;
    mpq_abs(r.q_, q_);
    return r;
}

BigRational BigRational::negated() const {
    BigRational r;
    mpq_neg(r.q_, q_);
    return r;
}

BigRational BigRational::reciprocal() const {
    if (is_zero()) throw std::domain_error("division by zero");
    BigRational r;
    mpq_inv(r.q_, q_);
    return r;
}

BigRational BigRational::pow(long e) const {
    if (e == 0) return BigRational(1);
    bool invert = e < 0;
    unsigned long exp = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    BigRational r;
    mpz_pow_ui(mpq_numref(r.q_), mpq_numref(q_), exp);
    mpz_pow_ui(mpq_denref(r.q_), mpq_denref(q_), exp);
    // canonical input stays canonical under coordinatewise powers
    return invert ? r.reciprocal() : r;
}

BigRational& BigRational::operator+=(const BigRational& rhs) {
    mpq_add(q_, q_, rhs.q_);
    return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs) {
    mpq_sub(q_, q_, rhs.q_);
    return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs) {
    mpq_mul(q_, q_, rhs.q_);
    return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("division by zero");
    mpq_div(q_, q_, rhs.q_);
    return *this;
}

BigRational operator+(const BigRational& a, const BigRational& b) {
    BigRational r;
    mpq_add(r.q_, a.q_, b.q_);
    return r;
}

BigRational operator-(const BigRational& a, const BigRational& b) {
    BigRational r;
    mpq_sub(r.q_, a.q_, b.q_);
    return r;
}

BigRational operator*(const BigRational& a, const BigRational& b) {
    BigRational r;
    mpq_mul(r.q_, a.q_, b.q_);
    return r;
}

BigRational operator/(const BigRational& a, const BigRational& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    BigRational r;
    mpq_div(r.q_, a.q_, b.q_);
    return r;
}

BigRational operator-(const BigRational& a) { return a.negated(); }

std::ostream& operator<<(std::ostream& os, const BigRational& v) { return os << v.to_string(); }

}  // namespace ratsurf
