#include <doctest.h>

#include "ratsurf/batch.hpp"
#include "support.hpp"

using namespace ratsurf;
using namespace ratsurf::testsupport;

TEST_CASE("parallel kernels agree with the serial reference") {
    Rng rng(14701);

    std::vector<Poly> polys;
    std::uniform_int_distribution<int> lin(0, 4), quad(0, 2);
    for (int i = 0; i < 40; ++i) {
        int k = lin(rng), m = quad(rng);
        if (k + m == 0) k = 2;
        polys.push_back(rand_factored_poly(rng, k, m, 20));
    }
    CHECK(batch_count_real_roots(polys, ExecMode::Serial) ==
          batch_count_real_roots(polys, ExecMode::Parallel));

    auto sources = rand_distinct_torus_points(rng, 2, 15, true);
    auto targets = rand_distinct_torus_points(rng, 2, 15, true);
    TorusMap f = build_transitivity_map(sources, targets);

    std::vector<TorusPoint> pts;
    for (int i = 0; i < 32; ++i) pts.push_back(rand_torus_point(rng, 12, true));
    CHECK(batch_apply(f, pts, ExecMode::Serial) == batch_apply(f, pts, ExecMode::Parallel));
    CHECK(batch_round_trip(f, pts, ExecMode::Serial) == pts);
    CHECK(batch_round_trip(f, pts, ExecMode::Parallel) == pts);

    Certificate serial = certify_map(f, ExecMode::Serial);
    Certificate parallel = certify_map(f, ExecMode::Parallel);
    CHECK(serial.valid == parallel.valid);
    REQUIRE(serial.moves.size() == parallel.moves.size());
    for (std::size_t i = 0; i < serial.moves.size(); ++i) {
        CHECK(serial.moves[i].ok == parallel.moves[i].ok);
        CHECK(serial.moves[i].kind == parallel.moves[i].kind);
    }

    std::vector<TorusMap> maps = {f, invert(f), TorusMap{}};
    auto cs = batch_certify(maps, ExecMode::Serial);
    auto cp = batch_certify(maps, ExecMode::Parallel);
    REQUIRE(cs.size() == cp.size());
    for (std::size_t i = 0; i < cs.size(); ++i) CHECK(cs[i].valid == cp[i].valid);
}

TEST_CASE("invalid moves surface identically in both modes") {
    TorusMap bad;
    bad.moves.push_back(FiberScale::unchecked(FiberScale::Axis::ScaleY, Poly::parse("[-1, 0, 1]"),
                                              Poly::parse("[1, 0, 1]")));
    Certificate s = certify_map(bad, ExecMode::Serial);
    Certificate p = certify_map(bad, ExecMode::Parallel);
    CHECK_FALSE(s.valid);
    CHECK_FALSE(p.valid);
    REQUIRE(s.first_invalid.has_value());
    REQUIRE(p.first_invalid.has_value());
    CHECK(*s.first_invalid == *p.first_invalid);
}
