#pragma once

// Deterministic generators shared by the unit and acceptance suites.

#include <array>
#include <optional>
#include <random>
#include <vector>

#include "ratsurf/poly.hpp"
#include "ratsurf/projective.hpp"
#include "ratsurf/torus.hpp"

namespace ratsurf::testsupport {

using Rng = std::mt19937_64;

inline BigRational rand_rational(Rng& rng, long height) {
    std::uniform_int_distribution<long> num(-height, height);
    std::uniform_int_distribution<long> den(1, height);
    return BigRational(num(rng), den(rng));
}

inline BigRational rand_positive_rational(Rng& rng, long height) {
    std::uniform_int_distribution<long> num(1, height);
    std::uniform_int_distribution<long> den(1, height);
    return BigRational(num(rng), den(rng));
}

inline ProjPoint1 rand_proj1(Rng& rng, long height, bool allow_infinity) {
    if (allow_infinity) {
        std::uniform_int_distribution<int> inf(0, 7);
        if (inf(rng) == 0) return ProjPoint1::infinity();
    }
    return ProjPoint1::from_rational(rand_rational(rng, height));
}

inline TorusPoint rand_torus_point(Rng& rng, long height, bool allow_infinity) {
    return TorusPoint{rand_proj1(rng, height, allow_infinity),
                      rand_proj1(rng, height, allow_infinity)};
}

inline std::vector<TorusPoint> rand_distinct_torus_points(Rng& rng, std::size_t n, long height,
                                                          bool allow_infinity) {
    std::vector<TorusPoint> pts;
    while (pts.size() < n) {
        TorusPoint cand = rand_torus_point(rng, height, allow_infinity);
        bool dup = false;
        for (const auto& p : pts) dup = dup || p == cand;
        if (!dup) pts.push_back(cand);
    }
    return pts;
}

/// Product of `linear` distinct rational linear factors and `quadratic`
/// negative-discriminant quadratics, optionally negated; the number of
/// distinct real roots is `linear` by construction.
inline Poly rand_factored_poly(Rng& rng, int linear, int quadratic, long height,
                               bool random_sign = true) {
    Poly p = Poly::constant(BigRational(1));
    std::vector<BigRational> roots;
    while (static_cast<int>(roots.size()) < linear) {
        BigRational r = rand_rational(rng, height);
        bool dup = false;
        for (const auto& e : roots) dup = dup || e == r;
        if (dup) continue;
        roots.push_back(r);
        p = p * Poly::linear_root(r);
    }
    for (int i = 0; i < quadratic; ++i) {
        // z^2 + b z + c with c > b^2/4
        BigRational b = rand_rational(rng, height);
        BigRational c = b * b * BigRational(1, 4) + rand_positive_rational(rng, height);
        p = p * Poly(std::vector<BigRational>{c, b, BigRational(1)});
    }
    if (random_sign) {
        std::uniform_int_distribution<int> flip(0, 1);
        if (flip(rng) == 1) p = -p;
    }
    return p;
}

inline GaussianRational rand_gaussian(Rng& rng, long height) {
    return GaussianRational(rand_rational(rng, height), rand_rational(rng, height));
}

inline GaussianPoint2 rand_gaussian_point(Rng& rng, long height) {
    while (true) {
        GaussianRational x = rand_gaussian(rng, height);
        GaussianRational y = rand_gaussian(rng, height);
        GaussianRational z = rand_gaussian(rng, height);
        if (x.is_zero() && y.is_zero() && z.is_zero()) continue;
        return GaussianPoint2(x, y, z);
    }
}

/// Exhaustive exact search over small Gaussian-integer points for a
/// conjugation-closed six-point configuration satisfying all three
/// conditions. Deterministic; the result is cached.
inline const std::optional<std::array<GaussianPoint2, 6>>& find_six_point_configuration() {
    static const std::optional<std::array<GaussianPoint2, 6>> cached = [] {
        auto gpoint = [](long a, long b, long c, long d) {
            return GaussianPoint2(GaussianRational(BigRational(a), BigRational(b)),
                                  GaussianRational(BigRational(c), BigRational(d)),
                                  GaussianRational(BigRational(1), BigRational(0)));
        };
        std::vector<GaussianPoint2> pool;
        for (long a = -1; a <= 1; ++a) {
            for (long b = -1; b <= 1; ++b) {
                for (long c = -1; c <= 1; ++c) {
                    pool.push_back(gpoint(a, b, c, 1));  // y strictly nonreal
                }
            }
        }
        const std::size_t n = pool.size();
        std::optional<std::array<GaussianPoint2, 6>> found;
        for (std::size_t i = 0; i < n && !found; ++i) {
            for (std::size_t j = i + 1; j < n && !found; ++j) {
                for (std::size_t k = j + 1; k < n && !found; ++k) {
                    std::array<GaussianPoint2, 6> cand = {pool[i],        pool[j],
                                                          pool[k],        pool[i].conj(),
                                                          pool[j].conj(), pool[k].conj()};
                    bool distinct = true;
                    for (int a = 0; a < 6 && distinct; ++a) {
                        for (int b = a + 1; b < 6; ++b) {
                            distinct = distinct && !(cand[a] == cand[b]);
                        }
                    }
                    if (!distinct) continue;
                    if (validate_six_config(cand).valid()) found = cand;
                }
            }
        }
        return found;
    }();
    return cached;
}

}  // namespace ratsurf::testsupport
