#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ratsurf/rational.hpp"

namespace ratsurf {

/// Univariate polynomial over the rationals, dense coefficients, lowest degree
/// first. The zero polynomial has an empty coefficient list; otherwise the
/// leading (last) coefficient is nonzero.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) { strip(); }

    static Poly zero() { return Poly(); }
    static Poly constant(const BigRational& c) { return Poly(std::vector<BigRational>{c}); }
    /// x - r
    static Poly linear_root(const BigRational& r);

    /// Parses the dense list format, lowest degree first: "[1, 0, 1]".
    static Poly parse(const std::string& text);
    std::string to_string() const;

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const BigRational& leading() const;
    BigRational coeff(std::size_t i) const;
    const std::vector<BigRational>& coeffs() const { return c_; }

    BigRational eval(const BigRational& x) const;
    Poly derivative() const;
    Poly monic() const;

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const BigRational& s, const Poly& p);
    friend Poly operator-(const Poly& a);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    void strip();
    std::vector<BigRational> c_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

/// Euclidean division; divisor must be nonzero. Returns (quotient, remainder).
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);

/// Monic greatest common divisor. Throws std::domain_error("gcd undefined")
/// when both arguments are zero.
Poly poly_gcd(const Poly& a, const Poly& b);

/// Interval endpoint for real-root counting: a rational or one of the two
/// infinities.
class Bound {
public:
    enum class Kind { NegInfinity, Finite, PosInfinity };

    static Bound neg_infinity() { return Bound(Kind::NegInfinity, BigRational()); }
    static Bound pos_infinity() { return Bound(Kind::PosInfinity, BigRational()); }
    static Bound at(BigRational v) { return Bound(Kind::Finite, std::move(v)); }

    Kind kind() const { return kind_; }
    const BigRational& value() const { return value_; }

    /// Total order with -inf < finite < +inf.
    friend bool operator<(const Bound& a, const Bound& b);

private:
    Bound(Kind k, BigRational v) : kind_(k), value_(std::move(v)) {}
    Kind kind_;
    BigRational value_;
};

/// Sturm chain of a nonzero polynomial: square-free seed, its derivative, then
/// successive negated remainders down to a constant. The certification device
/// for "no real zeros".
class SturmChain {
public:
    explicit SturmChain(const Poly& p);

    const std::vector<Poly>& polys() const { return chain_; }

    /// Sign variations at a point (zeros skipped).
    long variations(const Bound& at) const;
    /// Distinct real roots of the seed in (lo, hi].
    long count(const Bound& lo, const Bound& hi) const;

private:
    std::vector<Poly> chain_;
};

/// Number of distinct real roots of p in (lo, hi], by Sturm sign-variation
/// difference on the square-free part of p. Endpoints may be infinite.
/// Throws std::domain_error("identically zero") on the zero polynomial.
long count_real_roots(const Poly& p, const Bound& lo, const Bound& hi);
/// Distinct real roots over the whole line.
long count_real_roots(const Poly& p);

}  // namespace ratsurf
