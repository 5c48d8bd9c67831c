#pragma once

#include <array>
#include <string>
#include <vector>

#include "ratsurf/rational.hpp"
#include "ratsurf/torus.hpp"

namespace ratsurf {

/// Element of Q(i): re + im*i with exact rational parts.
struct GaussianRational {
    BigRational re;
    BigRational im;

    GaussianRational() = default;
    GaussianRational(BigRational r, BigRational i) : re(std::move(r)), im(std::move(i)) {}
    explicit GaussianRational(long r) : re(r), im(0) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }
    GaussianRational conj() const { return {re, -im}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b);
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b);
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b);
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);
    friend GaussianRational operator-(const GaussianRational& a);
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
        return !(a == b);
    }

    std::string to_string() const;
};

/// Real point of P^2 in canonical integer coordinates: coprime, not all zero,
/// first nonzero coordinate positive.
class ProjPoint2 {
public:
    ProjPoint2() : c_{BigInt(0), BigInt(0), BigInt(1)} {}
    ProjPoint2(BigInt x, BigInt y, BigInt z);

    const BigInt& x() const { return c_[0]; }
    const BigInt& y() const { return c_[1]; }
    const BigInt& z() const { return c_[2]; }
    const BigInt& operator[](std::size_t i) const { return c_[i]; }

    friend bool operator==(const ProjPoint2& p, const ProjPoint2& q) { return p.c_ == q.c_; }
    friend bool operator!=(const ProjPoint2& p, const ProjPoint2& q) { return !(p == q); }

    std::string to_string() const;

private:
    std::array<BigInt, 3> c_;
};

/// Complex point of P^2 over Q(i), scaled so the first nonzero coordinate is 1.
class GaussianPoint2 {
public:
    GaussianPoint2(GaussianRational x, GaussianRational y, GaussianRational z);
    explicit GaussianPoint2(const ProjPoint2& p);

    const GaussianRational& x() const { return c_[0]; }
    const GaussianRational& y() const { return c_[1]; }
    const GaussianRational& z() const { return c_[2]; }
    const GaussianRational& operator[](std::size_t i) const { return c_[i]; }

    GaussianPoint2 conj() const;
    bool is_real() const;

    friend bool operator==(const GaussianPoint2& p, const GaussianPoint2& q) {
        return p.c_ == q.c_;
    }
    friend bool operator!=(const GaussianPoint2& p, const GaussianPoint2& q) { return !(p == q); }

    std::string to_string() const;

private:
    std::array<GaussianRational, 3> c_;
};

/// Real projective line in dual canonical integer coordinates.
class Line2 {
public:
    Line2(BigInt l, BigInt m, BigInt n);

    const BigInt& l() const { return c_[0]; }
    const BigInt& m() const { return c_[1]; }
    const BigInt& n() const { return c_[2]; }

    /// l*x + m*y + n*z
    BigInt incidence(const ProjPoint2& p) const;
    bool contains(const ProjPoint2& p) const { return incidence(p).is_zero(); }

    friend bool operator==(const Line2& a, const Line2& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Line2& a, const Line2& b) { return !(a == b); }

    std::string to_string() const;

private:
    std::array<BigInt, 3> c_;
};

/// 3x3 rational matrix acting on P^2.
struct Mat3 {
    std::array<std::array<BigRational, 3>, 3> m;

    static Mat3 identity();
    BigRational det() const;
    Mat3 adjugate() const;
    ProjPoint2 apply(const ProjPoint2& p) const;
    friend Mat3 operator*(const Mat3& a, const Mat3& b);
};

/// True iff the 3x3 coordinate determinant vanishes.
bool collinear(const ProjPoint2& p, const ProjPoint2& q, const ProjPoint2& r);

/// Line through two distinct points (cross product, canonicalized).
Line2 line_through(const ProjPoint2& p, const ProjPoint2& q);

/// Invertible matrix sending p1 to [1:0:0], p2 to [0:1:0] and l to {z = 0}.
/// Requires p1 != p2 with both on l (so l is the line through them).
Mat3 standardize(const ProjPoint2& p1, const ProjPoint2& p2, const Line2& l);

/// Birational transfer P^2 -> P^1 x P^1 obtained by blowing up p1, p2 and
/// contracting the line through them. In the standard frame the map is
/// [x:y:z] -> ([y:z], [x:z]) with inverse ([a:b],[c:d]) -> [c*b : a*d : b*d].
class TorusTransfer {
public:
    TorusTransfer(const ProjPoint2& p1, const ProjPoint2& p2, const Line2& l);

    /// Throws std::domain_error("indeterminate or contracted locus") at p1, p2
    /// or on l.
    TorusPoint forward(const ProjPoint2& p) const;
    /// Throws the same error on the two exceptional fibers (b = 0 or d = 0 in
    /// the standard frame).
    ProjPoint2 inverse(const TorusPoint& t) const;

    const Mat3& to_standard() const { return to_std_; }

private:
    Mat3 to_std_;
    Mat3 from_std_;
};

TorusTransfer p2_to_torus(const ProjPoint2& p1, const ProjPoint2& p2, const Line2& l);

/// Conic in P^2 over Q(i): symmetric 3x3 matrix up to scale, normalized so the
/// first nonzero entry (row-major upper triangle) is 1.
class Conic {
public:
    explicit Conic(std::array<std::array<GaussianRational, 3>, 3> m);

    const std::array<std::array<GaussianRational, 3>, 3>& matrix() const { return m_; }
    GaussianRational evaluate(const GaussianPoint2& p) const;
    GaussianRational det() const;
    bool is_singular() const { return det().is_zero(); }
    Conic conj() const;

    friend bool operator==(const Conic& a, const Conic& b) { return a.m_ == b.m_; }

private:
    std::array<std::array<GaussianRational, 3>, 3> m_;
};

/// Unique conic through five points; requires the 5x6 incidence matrix to have
/// rank 5, else throws std::domain_error("degenerate configuration: conic not
/// unique").
Conic conic_through_five(const std::array<GaussianPoint2, 5>& pts);

/// Cremona configuration report: the three conditions on six complex points.
struct ConfigReport {
    bool conjugation_closed = false;
    bool no_common_conic = false;
    bool five_point_conics_nonsingular = false;
    /// Per 5-subset outcome, indexed by the omitted point.
    std::array<bool, 6> subset_ok{};

    bool valid() const {
        return conjugation_closed && no_common_conic && five_point_conics_nonsingular;
    }
};

/// Checks: (1) closure under conjugation, (2) no conic through all six
/// (6x6 monomial matrix has rank 6), (3) each 5-subset conic exists and is
/// nonsingular. Points must be pairwise distinct.
ConfigReport validate_six_config(const std::array<GaussianPoint2, 6>& pts);

}  // namespace ratsurf
