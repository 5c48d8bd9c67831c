#include <doctest.h>

#include <stdexcept>

#include <algorithm>

#include "ratsurf/projective.hpp"
#include "support.hpp"

#include <optional>

using namespace ratsurf;
using namespace ratsurf::testsupport;

namespace {

ProjPoint2 pp(long x, long y, long z) { return ProjPoint2(BigInt(x), BigInt(y), BigInt(z)); }

GaussianRational gr(long re, long im = 0) {
    return GaussianRational(BigRational(re), BigRational(im));
}

GaussianPoint2 gp(long xr, long xi, long yr, long yi, long zr, long zi) {
    return GaussianPoint2(gr(xr, xi), gr(yr, yi), gr(zr, zi));
}

}  // namespace

TEST_CASE("collinearity determinant") {
    CHECK(collinear(pp(1, 0, 0), pp(0, 1, 0), pp(1, 1, 0)));
    CHECK_FALSE(collinear(pp(1, 0, 0), pp(0, 1, 0), pp(0, 0, 1)));
    CHECK(collinear(pp(1, 1, 1), pp(2, 2, 2), pp(0, 0, 1)));  // repeated projective point
}

TEST_CASE("line through two points") {
    CHECK(line_through(pp(1, 0, 0), pp(0, 1, 0)) == Line2(BigInt(0), BigInt(0), BigInt(1)));
    Line2 l = line_through(pp(1, 0, 1), pp(0, 1, 1));
    CHECK(l == Line2(BigInt(1), BigInt(1), BigInt(-1)));  // x + y - z = 0, canonical sign
    CHECK_THROWS_AS(line_through(pp(1, 1, 1), pp(2, 2, 2)), std::invalid_argument);
}

TEST_CASE("line incidence holds for both defining points") {
    Rng rng(11401);
    std::uniform_int_distribution<long> c(-9, 9);
    for (int it = 0; it < 60; ++it) {
        ProjPoint2 p(BigInt(c(rng)), BigInt(c(rng)), BigInt(c(rng) == 0 ? 1 : c(rng)));
        ProjPoint2 q(BigInt(c(rng)), BigInt(c(rng)), BigInt(c(rng) == 0 ? 1 : c(rng)));
        if (p == q) continue;
        Line2 l = line_through(p, q);
        CHECK(l.incidence(p).is_zero());
        CHECK(l.incidence(q).is_zero());
    }
}

TEST_CASE("standardize: already-standard triple returns a diagonal matrix") {
    Mat3 a = standardize(pp(1, 0, 0), pp(0, 1, 0), Line2(BigInt(0), BigInt(0), BigInt(1)));
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            if (i == j) {
                CHECK_FALSE(a.m[i][j].is_zero());
            } else {
                CHECK(a.m[i][j].is_zero());
            }
        }
    }
}

TEST_CASE("standardize normalizes a generic pair with its joining line") {
    ProjPoint2 p1 = pp(1, 1, 1), p2 = pp(1, -1, 1);
    Line2 l = line_through(p1, p2);
    CHECK(l == Line2(BigInt(1), BigInt(0), BigInt(-1)));  // x - z = 0
    Mat3 a = standardize(p1, p2, l);
    CHECK(a.apply(p1) == pp(1, 0, 0));
    CHECK(a.apply(p2) == pp(0, 1, 0));
    CHECK_FALSE(a.det().is_zero());
    // the joining line maps into {z = 0}
    ProjPoint2 on_line = pp(1, 5, 1);
    REQUIRE(l.contains(on_line));
    CHECK(a.apply(on_line).z().is_zero());
}

TEST_CASE("standardize rejects a line missing the base points") {
    // a line through neither point cannot satisfy the frame postconditions
    CHECK_THROWS_WITH_AS(standardize(pp(1, 1, 1), pp(1, -1, 1), Line2(BigInt(1), BigInt(0), BigInt(0))),
                         "line must contain both base points", std::invalid_argument);
    CHECK_THROWS_AS(standardize(pp(1, 1, 1), pp(1, 1, 1), Line2(BigInt(1), BigInt(0), BigInt(-1))),
                    std::invalid_argument);
}

TEST_CASE("standardize postcondition on random pairs") {
    Rng rng(11402);
    std::uniform_int_distribution<long> c(-6, 6);
    for (int it = 0; it < 40; ++it) {
        ProjPoint2 p1(BigInt(c(rng)), BigInt(c(rng)), BigInt(2 * c(rng) + 1));
        ProjPoint2 p2(BigInt(c(rng)), BigInt(c(rng)), BigInt(2 * c(rng) + 1));
        if (p1 == p2) continue;
        Line2 l = line_through(p1, p2);
        Mat3 a = standardize(p1, p2, l);
        CHECK(a.apply(p1) == pp(1, 0, 0));
        CHECK(a.apply(p2) == pp(0, 1, 0));
    }
}

TEST_CASE("transfer in the standard frame") {
    TorusTransfer t = p2_to_torus(pp(1, 0, 0), pp(0, 1, 0), Line2(BigInt(0), BigInt(0), BigInt(1)));
    TorusPoint one = t.forward(pp(1, 1, 1));
    CHECK(one.x == ProjPoint1(BigInt(1), BigInt(1)));
    CHECK(one.y == ProjPoint1(BigInt(1), BigInt(1)));
    TorusPoint w = t.forward(pp(2, 3, 1));
    CHECK(w.x == ProjPoint1(BigInt(3), BigInt(1)));
    CHECK(w.y == ProjPoint1(BigInt(2), BigInt(1)));
    CHECK(t.inverse(w) == pp(2, 3, 1));
}

TEST_CASE("transfer error locus") {
    ProjPoint2 p1 = pp(1, 1, 1), p2 = pp(1, -1, 1);
    Line2 l = line_through(p1, p2);
    TorusTransfer t = p2_to_torus(p1, p2, l);
    CHECK_THROWS_WITH_AS(t.forward(p1), "indeterminate or contracted locus", std::domain_error);
    CHECK_THROWS_WITH_AS(t.forward(p2), "indeterminate or contracted locus", std::domain_error);
    ProjPoint2 on_line = pp(1, 7, 1);
    REQUIRE(l.contains(on_line));
    CHECK_THROWS_WITH_AS(t.forward(on_line), "indeterminate or contracted locus",
                         std::domain_error);
    // exceptional fibers of the inverse
    CHECK_THROWS_AS(t.inverse(TorusPoint{ProjPoint1::infinity(), ProjPoint1(BigInt(1), BigInt(1))}),
                    std::domain_error);
    CHECK_THROWS_AS(t.inverse(TorusPoint{ProjPoint1(BigInt(1), BigInt(1)), ProjPoint1::infinity()}),
                    std::domain_error);
}

TEST_CASE("transfer round trip on random points") {
    Rng rng(11403);
    std::uniform_int_distribution<long> c(-8, 8);
    ProjPoint2 p1 = pp(2, 1, 1), p2 = pp(-1, 3, 1);
    Line2 l = line_through(p1, p2);
    TorusTransfer t = p2_to_torus(p1, p2, l);
    int done = 0;
    while (done < 60) {
        ProjPoint2 r(BigInt(c(rng)), BigInt(c(rng)), BigInt(c(rng)));
        if (!l.incidence(r).is_zero()) {
            CHECK(t.inverse(t.forward(r)) == r);
            ++done;
        }
    }
    // torus-side composition off the exceptional fibers
    for (int it = 0; it < 40; ++it) {
        TorusPoint u{ProjPoint1(BigInt(c(rng)), BigInt(1)), ProjPoint1(BigInt(c(rng)), BigInt(1))};
        CHECK(t.forward(t.inverse(u)) == u);
    }
}

TEST_CASE("conic through five standard points") {
    std::array<GaussianPoint2, 5> pts = {gp(1, 0, 0, 0, 0, 0), gp(0, 0, 1, 0, 0, 0),
                                         gp(0, 0, 0, 0, 1, 0), gp(1, 0, 1, 0, 1, 0),
                                         gp(1, 0, 2, 0, 3, 0)};
    Conic c = conic_through_five(pts);
    for (const auto& p : pts) CHECK(c.evaluate(p).is_zero());
    CHECK_FALSE(c.is_singular());
}

TEST_CASE("five points with four collinear have no unique conic") {
    std::array<GaussianPoint2, 5> pts = {gp(0, 0, 0, 0, 1, 0), gp(1, 0, 0, 0, 1, 0),
                                         gp(2, 0, 0, 0, 1, 0), gp(3, 0, 0, 0, 1, 0),
                                         gp(0, 0, 1, 0, 0, 0)};
    CHECK_THROWS_WITH_AS(conic_through_five(pts), "degenerate configuration: conic not unique",
                         std::domain_error);
}

TEST_CASE("conic construction is conjugation-equivariant") {
    Rng rng(11404);
    int done = 0;
    while (done < 20) {
        std::array<GaussianPoint2, 5> pts = {rand_gaussian_point(rng, 3), rand_gaussian_point(rng, 3),
                                             rand_gaussian_point(rng, 3), rand_gaussian_point(rng, 3),
                                             rand_gaussian_point(rng, 3)};
        bool distinct = true;
        for (int i = 0; i < 5; ++i) {
            for (int j = i + 1; j < 5; ++j) distinct = distinct && !(pts[i] == pts[j]);
        }
        if (!distinct) continue;
        try {
            Conic c = conic_through_five(pts);
            std::array<GaussianPoint2, 5> conj = {pts[0].conj(), pts[1].conj(), pts[2].conj(),
                                                  pts[3].conj(), pts[4].conj()};
            CHECK(conic_through_five(conj) == c.conj());
            ++done;
        } catch (const std::domain_error&) {
            continue;  // degenerate draw
        }
    }
}


TEST_CASE("six points on a common conic fail condition 2") {
    // rational points of the conic x*z = y^2, parametrized [1 : t : t^2]
    std::array<GaussianPoint2, 6> pts = {gp(1, 0, 0, 0, 0, 0),   gp(1, 0, 1, 0, 1, 0),
                                         gp(1, 0, 2, 0, 4, 0),   gp(1, 0, 3, 0, 9, 0),
                                         gp(1, 0, -1, 0, 1, 0),  gp(1, 0, -2, 0, 4, 0)};
    ConfigReport report = validate_six_config(pts);
    CHECK(report.conjugation_closed);  // all real
    CHECK_FALSE(report.no_common_conic);
    CHECK_FALSE(report.valid());
}

TEST_CASE("a set not closed under conjugation fails condition 1") {
    auto good = find_six_point_configuration();
    REQUIRE(good.has_value());
    std::array<GaussianPoint2, 6> broken = *good;
    // replace one conjugate with a fresh nonreal point not already present
    broken[3] = gp(1, 1, 1, -1, 1, 0) == broken[3] ? gp(1, 1, -1, 1, 1, 0) : gp(1, 1, 1, -1, 1, 0);
    bool distinct = true;
    for (int a = 0; a < 6 && distinct; ++a) {
        for (int b = a + 1; b < 6; ++b) distinct = distinct && !(broken[a] == broken[b]);
    }
    if (distinct) {
        ConfigReport report = validate_six_config(broken);
        CHECK_FALSE(report.conjugation_closed);
    }
}

TEST_CASE("an exhibited conjugation-closed configuration passes all conditions") {
    auto good = find_six_point_configuration();
    REQUIRE(good.has_value());
    ConfigReport report = validate_six_config(*good);
    CHECK(report.conjugation_closed);
    CHECK(report.no_common_conic);
    CHECK(report.five_point_conics_nonsingular);
    CHECK(report.valid());

    // permutation invariance
    std::array<GaussianPoint2, 6> shuffled = {(*good)[5], (*good)[3], (*good)[1],
                                              (*good)[4], (*good)[0], (*good)[2]};
    ConfigReport again = validate_six_config(shuffled);
    CHECK(again.conjugation_closed == report.conjugation_closed);
    CHECK(again.no_common_conic == report.no_common_conic);
    CHECK(again.five_point_conics_nonsingular == report.five_point_conics_nonsingular);
}

TEST_CASE("duplicate points are rejected") {
    std::array<GaussianPoint2, 6> pts = {gp(1, 0, 0, 0, 0, 0), gp(1, 0, 0, 0, 0, 0),
                                         gp(0, 0, 1, 0, 0, 0), gp(0, 0, 0, 0, 1, 0),
                                         gp(1, 0, 1, 0, 1, 0), gp(1, 0, 2, 0, 3, 0)};
    CHECK_THROWS_WITH_AS(validate_six_config(pts), "points not distinct", std::invalid_argument);
}
