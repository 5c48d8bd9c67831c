#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ratsurf/interpolate.hpp"
#include "ratsurf/poly.hpp"

namespace ratsurf {

/// Point of P^1 in canonical homogeneous coordinates: coprime integers,
/// first nonzero coordinate positive. Infinity is [1:0].
class ProjPoint1 {
public:
    ProjPoint1() : a_(0), b_(1) {}
    ProjPoint1(BigInt a, BigInt b);

    static ProjPoint1 infinity() { return ProjPoint1(BigInt(1), BigInt(0)); }
    static ProjPoint1 from_rational(const BigRational& t);
    /// [num(x)*den(y) : num(y)*den(x)] for rationals given as a ratio x/y.
    static ProjPoint1 from_ratio(const BigRational& x, const BigRational& y);

    const BigInt& a() const { return a_; }
    const BigInt& b() const { return b_; }
    bool is_infinite() const { return b_.is_zero(); }
    /// Affine value a/b; throws std::domain_error at infinity.
    BigRational affine() const;

    friend bool operator==(const ProjPoint1& p, const ProjPoint1& q) {
        return p.a_ == q.a_ && p.b_ == q.b_;
    }
    friend bool operator!=(const ProjPoint1& p, const ProjPoint1& q) { return !(p == q); }

    std::string to_string() const;

private:
    BigInt a_, b_;
};

/// Real point of P^1 x P^1.
struct TorusPoint {
    ProjPoint1 x;
    ProjPoint1 y;

    friend bool operator==(const TorusPoint& p, const TorusPoint& q) {
        return p.x == q.x && p.y == q.y;
    }
    friend bool operator!=(const TorusPoint& p, const TorusPoint& q) { return !(p == q); }
    std::string to_string() const;
};

/// Elementary fiber scaling (x,y) -> (x, p(x)/q(x) * y) (axis ScaleY), or the
/// coordinate-swapped variant (axis ScaleX). Everywhere defined on real
/// points: deg p = deg q and q has no real zeros, so the homogenized
/// denominator never vanishes.
class FiberScale {
public:
    enum class Axis { ScaleY, ScaleX };

    /// Validating constructor: equal degrees, no real zeros (Sturm), positive
    /// leading coefficients. Throws std::invalid_argument on violation.
    FiberScale(Axis axis, Poly p, Poly q);
    /// No validation; for deserialization and for exercising `certify`.
    static FiberScale unchecked(Axis axis, Poly p, Poly q);

    Axis axis() const { return axis_; }
    const Poly& numerator() const { return p_; }
    const Poly& denominator() const { return q_; }

    /// Homogenized factor at [a:b]: the pair (P(a,b), Q(a,b)) for a jointly
    /// rescaled integer form of (p, q).
    std::pair<BigInt, BigInt> factor(const ProjPoint1& t) const;

    FiberScale inverted() const { return unchecked(axis_, q_, p_); }

private:
    FiberScale() = default;
    void build_cache();

    Axis axis_ = Axis::ScaleY;
    Poly p_, q_;
    std::vector<BigInt> hp_, hq_;  // joint primitive integer coefficients, padded
    int deg_ = 0;
};

/// 2x2 rational matrix acting projectively on P^1.
struct Mat2 {
    BigRational a, b, c, d;  // [[a, b], [c, d]]

    static Mat2 identity() { return {BigRational(1), BigRational(0), BigRational(0), BigRational(1)}; }
    BigRational det() const { return a * d - b * c; }
    Mat2 adjugate() const { return {d, -b, -c, a}; }
    ProjPoint1 apply(const ProjPoint1& t) const;
    friend Mat2 operator*(const Mat2& m, const Mat2& n);
};

/// Pair of projective-linear moves, one per factor of P^1 x P^1.
class MoebiusPair {
public:
    MoebiusPair(Mat2 mx, Mat2 my);
    static MoebiusPair unchecked(Mat2 mx, Mat2 my);

    const Mat2& mx() const { return mx_; }
    const Mat2& my() const { return my_; }

    TorusPoint apply(const TorusPoint& pt) const;
    MoebiusPair inverted() const { return unchecked(mx_.adjugate(), my_.adjugate()); }

private:
    MoebiusPair() = default;
    Mat2 mx_, my_;
};

using TorusMove = std::variant<FiberScale, MoebiusPair>;

/// Composable sequence of elementary birational self-maps of P^1 x P^1,
/// applied front to back. The identity is the empty list.
struct TorusMap {
    std::vector<TorusMove> moves;
};

TorusPoint apply_move(const TorusMove& move, const TorusPoint& pt);
TorusPoint apply(const TorusMap& f, const TorusPoint& pt);

/// Reverses the move list; fiber scales swap p and q, Moebius moves invert by
/// matrix adjugate.
TorusMap invert(const TorusMap& f);

/// Moebius pair sending every point to finite coordinates with affine value
/// >= 1, plus the images. Points must be pairwise distinct.
std::pair<MoebiusPair, std::vector<TorusPoint>> quadrant_normalize(
    const std::vector<TorusPoint>& points);

/// ScaleY move whose images have pairwise distinct y-coordinates. Points must
/// be distinct with finite, strictly positive coordinates.
FiberScale separate_y(const std::vector<TorusPoint>& points);

/// Composition of certified elementary moves with apply(f, sources[i]) ==
/// targets[i] exactly for all i.
TorusMap build_transitivity_map(const std::vector<TorusPoint>& sources,
                                const std::vector<TorusPoint>& targets);

struct MoveCheck {
    std::size_t index = 0;
    std::string kind;
    bool ok = true;
    std::string detail;
};

/// Re-verification report for every move of a map.
struct Certificate {
    bool valid = true;
    std::vector<MoveCheck> moves;
    std::optional<std::size_t> first_invalid;
};

/// Re-verifies every move: equal degrees, Sturm count 0 for p and q, positive
/// leading coefficients; nonzero determinants for Moebius moves.
Certificate certify(const TorusMap& f);

/// Check a single move (shared by certify and the batch kernels).
MoveCheck check_move(const TorusMove& move, std::size_t index);

}  // namespace ratsurf
