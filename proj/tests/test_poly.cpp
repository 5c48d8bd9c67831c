#include <doctest.h>

#include <stdexcept>

#include "ratsurf/poly.hpp"
#include "support.hpp"

using namespace ratsurf;
using namespace ratsurf::testsupport;

namespace {

Poly P(std::vector<long> cs) {
    std::vector<BigRational> r;
    for (long c : cs) r.emplace_back(c);
    return Poly(std::move(r));
}

}  // namespace

TEST_CASE("poly_eval on the stated examples") {
    CHECK(P({1, 0, 1}).eval(BigRational(2)) == BigRational(5));   // z^2 + 1 at 2
    CHECK(Poly::zero().eval(BigRational(7)) == BigRational(0));
    Poly sq = Poly::linear_root(BigRational(1)) * Poly::linear_root(BigRational(1));
    CHECK(sq.eval(BigRational(1)) == BigRational(0));  // (z-1)^2 at its root
}

TEST_CASE("polynomial text format") {
    CHECK(P({1, 0, 1}).to_string() == "[1, 0, 1]");
    CHECK(Poly::parse("[1, 0, 1]") == P({1, 0, 1}));
    CHECK(Poly::parse("[ -3/2, 7 ]").coeff(0) == BigRational(-3, 2));
    CHECK(Poly::parse("[]").is_zero());
    CHECK(Poly::parse("[0, 0]").is_zero());  // trailing zeros strip
    CHECK_THROWS_AS(Poly::parse("1, 0, 1"), std::invalid_argument);
    CHECK_THROWS_AS(Poly::parse("[1; 2]"), std::invalid_argument);
}

TEST_CASE("exact ring arithmetic agrees with evaluation") {
    Rng rng(7001);
    for (int it = 0; it < 40; ++it) {
        Poly a = rand_factored_poly(rng, 2, 1, 9);
        Poly b = rand_factored_poly(rng, 1, 1, 9);
        BigRational x = rand_rational(rng, 20);
        CHECK((a + b).eval(x) == a.eval(x) + b.eval(x));
        CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
        CHECK((a - b).eval(x) == a.eval(x) - b.eval(x));
    }
}

TEST_CASE("divmod identity") {
    Rng rng(7002);
    for (int it = 0; it < 30; ++it) {
        Poly a = rand_factored_poly(rng, 3, 1, 9);
        Poly b = rand_factored_poly(rng, 1, 1, 9);
        auto [q, r] = poly_divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
    }
    CHECK_THROWS_AS(poly_divmod(P({1}), Poly::zero()), std::domain_error);
}

TEST_CASE("poly_gcd on the stated examples") {
    // (z^2 - 1, z - 1) -> z - 1
    CHECK(poly_gcd(P({-1, 0, 1}), P({-1, 1})) == P({-1, 1}));
    // coprime pair -> 1
    CHECK(poly_gcd(P({1, 0, 1}), P({2, 1})) == P({1}));
    // gcd with zero -> monic other argument
    CHECK(poly_gcd(P({2, 4}), Poly::zero()) == P({2, 4}).monic());
    CHECK(poly_gcd(P({2, 4}), Poly::zero()).leading() == BigRational(1));
    CHECK_THROWS_AS(poly_gcd(Poly::zero(), Poly::zero()), std::domain_error);
}

TEST_CASE("poly_gcd divides both arguments; common divisors divide it") {
    Rng rng(7003);
    for (int it = 0; it < 25; ++it) {
        Poly g = rand_factored_poly(rng, 1, 1, 7);
        Poly a = g * rand_factored_poly(rng, 1, 0, 7);
        Poly b = g * rand_factored_poly(rng, 0, 1, 7);
        Poly d = poly_gcd(a, b);
        CHECK(poly_divmod(a, d).second.is_zero());
        CHECK(poly_divmod(b, d).second.is_zero());
        // the known common divisor divides the gcd
        CHECK(poly_divmod(d, g.monic()).second.is_zero());
        CHECK(d.leading() == BigRational(1));
    }
}
