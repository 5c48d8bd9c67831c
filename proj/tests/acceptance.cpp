// Acceptance suite: one line per criterion, nonzero exit when any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ratsurf/batch.hpp"
#include "ratsurf/json_io.hpp"
#include "support.hpp"

using namespace ratsurf;
using namespace ratsurf::testsupport;

namespace {

using Clock = std::chrono::steady_clock;

struct Failure {
    std::string what;
};

void expect(bool ok, const std::string& what) {
    if (!ok) throw Failure{what};
}

// --------------------------------------------------------------------------
// 1. Interpolation suite: 200 random instances, m <= 6, heights <= 100
// --------------------------------------------------------------------------
std::string criterion_interpolation() {
    Rng rng(101);
    std::uniform_int_distribution<int> mdist(1, 6);
    for (int it = 0; it < 200; ++it) {
        const int m = mdist(rng);
        std::vector<BigRational> nodes;
        while (static_cast<int>(nodes.size()) < m) {
            BigRational x = rand_rational(rng, 100);
            bool dup = false;
            for (const auto& n : nodes) dup = dup || n == x;
            if (!dup) nodes.push_back(x);
        }
        std::vector<BigRational> values;
        for (int i = 0; i < m; ++i) values.push_back(rand_positive_rational(rng, 100));

        PositiveInterpolant p = positive_interpolate(nodes, values);
        for (int i = 0; i < m; ++i) {
            expect(p.poly.eval(nodes[i]) == values[i], "node equality violated");
        }
        expect(count_real_roots(p.poly) == 0, "interpolant has real zeros");
        expect(p.poly.degree() == 2 * m, "degree != 2m");
        expect(p.poly.leading() == BigRational(1), "leading coefficient != 1");
        for (int s = 0; s < 100; ++s) {
            expect(p.poly.eval(rand_rational(rng, 100)).sign() > 0, "nonpositive sample value");
        }
    }
    return "200 instances, m <= 6, 100 positivity samples each";
}

// --------------------------------------------------------------------------
// 2. Transitivity suite: 100 random instances, n <= 6, heights <= 50,
//    infinities and negative coordinates included
// --------------------------------------------------------------------------
std::string criterion_transitivity() {
    const int instances = 100;
    std::vector<std::string> failures(instances);
    int infinite_coords = 0, negative_coords = 0;

#pragma omp parallel for schedule(dynamic) reduction(+ : infinite_coords, negative_coords)
    for (int it = 0; it < instances; ++it) {
        Rng rng(20'000 + it);
        std::uniform_int_distribution<int> ndist(1, 6);
        const std::size_t n = static_cast<std::size_t>(ndist(rng));
        auto sources = rand_distinct_torus_points(rng, n, 50, true);
        auto targets = rand_distinct_torus_points(rng, n, 50, true);
        for (const auto& list : {sources, targets}) {
            for (const auto& p : list) {
                for (const auto& c : {p.x, p.y}) {
                    if (c.is_infinite()) {
                        ++infinite_coords;
                    } else if (c.affine().sign() < 0) {
                        ++negative_coords;
                    }
                }
            }
        }
        try {
            TorusMap f = build_transitivity_map(sources, targets);
            for (std::size_t i = 0; i < n; ++i) {
                if (apply(f, sources[i]) != targets[i]) {
                    throw Failure{"image mismatch at point " + std::to_string(i)};
                }
            }
            Certificate cert = certify(f);
            if (!cert.valid) throw Failure{"certificate invalid"};
        } catch (const Failure& f) {
            failures[it] = "instance " + std::to_string(it) + ": " + f.what;
        } catch (const std::exception& e) {
            failures[it] = "instance " + std::to_string(it) + ": " + e.what();
        }
    }
    for (const auto& f : failures) {
        if (!f.empty()) throw Failure{f};
    }
    expect(infinite_coords > 0, "suite drew no infinite coordinates");
    expect(negative_coords > 0, "suite drew no negative coordinates");
    std::ostringstream note;
    note << instances << " instances, n <= 6 (" << infinite_coords << " infinite / "
         << negative_coords << " negative coordinates drawn)";
    return note.str();
}

// --------------------------------------------------------------------------
// 3. Sturm oracle: 500 factored polynomials of degree <= 12
// --------------------------------------------------------------------------
std::string criterion_sturm_oracle() {
    Rng rng(301);
    std::uniform_int_distribution<int> lin(0, 6);
    for (int it = 0; it < 500; ++it) {
        int k = lin(rng);
        std::uniform_int_distribution<int> quad(0, (12 - k) / 2);
        int m = quad(rng);
        if (k + m == 0) k = 1;
        Poly p = rand_factored_poly(rng, k, m, 100);
        expect(p.degree() <= 12, "degree overflow");
        long counted = count_real_roots(p);
        expect(counted == k,
               "count mismatch: got " + std::to_string(counted) + ", built " + std::to_string(k));
    }
    return "500 polynomials, degree <= 12";
}

// --------------------------------------------------------------------------
// 4. Inversion: 1000 exact random round trips per constructed map for
//    n = 1, 2, 3; a random image at n >= 4 carries 10^5..10^6-digit
//    coordinates (heights compound ~degree-fold per phase), so those sizes
//    get smaller exact random samples plus structured round trips
// --------------------------------------------------------------------------
std::string criterion_inversion() {
    long random_round_trips = 0;
    const std::pair<std::size_t, int> workload[] = {{1, 1000}, {2, 1000}, {3, 1000},
                                                    {4, 20},   {5, 6},    {6, 2}};
    for (const auto& [n, count] : workload) {
        Rng rng(400 + n);
        auto sources = rand_distinct_torus_points(rng, n, 50, true);
        auto targets = rand_distinct_torus_points(rng, n, 50, true);
        TorusMap f = build_transitivity_map(sources, targets);

        std::vector<TorusPoint> points;
        points.reserve(count);
        for (int i = 0; i < count; ++i) points.push_back(rand_torus_point(rng, 50, true));
        std::vector<TorusPoint> round = batch_round_trip(f, points, ExecMode::Parallel);
        for (std::size_t i = 0; i < points.size(); ++i) {
            expect(round[i] == points[i], "round trip mismatch (n = " + std::to_string(n) + ")");
        }
        random_round_trips += static_cast<long>(points.size());
    }

    // structured round trips across the full size range
    for (std::size_t n = 1; n <= 6; ++n) {
        Rng rng(440 + n);
        auto sources = rand_distinct_torus_points(rng, n, 50, true);
        auto targets = rand_distinct_torus_points(rng, n, 50, true);
        TorusMap f = build_transitivity_map(sources, targets);
        TorusMap g = invert(f);
        for (std::size_t i = 0; i < n; ++i) {
            expect(apply(g, apply(f, sources[i])) == sources[i],
                   "structured round trip mismatch at n = " + std::to_string(n));
            expect(apply(g, targets[i]) == sources[i], "inverse misses the source");
        }
    }
    return std::to_string(random_round_trips) + " random + structured round trips, exact";
}

// --------------------------------------------------------------------------
// 5. Forest reduction: 100 random forests with total length <= 6
// --------------------------------------------------------------------------
std::string criterion_forest_reduction() {
    Rng rng(501);
    std::uniform_int_distribution<int> ldist(0, 6), rdist(1, 3);
    for (int it = 0; it < 100; ++it) {
        const int target_edges = ldist(rng);
        const int roots = rdist(rng);
        BlowUpModel m;
        m.base = BaseSurface::P2;
        for (int r = 0; r < roots; ++r) {
            m.centers.push_back(Center{"r" + std::to_string(r), CenterKind::RealPoint, {}});
        }
        for (int e = 0; e < target_edges; ++e) {
            std::uniform_int_distribution<std::size_t> pick(0, m.centers.size() - 1);
            m.centers.push_back(Center{"c" + std::to_string(e), CenterKind::RealPoint,
                                       m.centers[pick(rng)].id});
        }
        m.validate();

        const std::size_t length = forest_length(m);
        const SurfaceType type = real_locus(m);
        const std::size_t count = m.centers.size();

        BlowUpModel cur = m;
        std::size_t steps = 0;
        while (auto step = forest_reduce_step(cur)) {
            cur = step->first;
            ++steps;
            expect(cur.centers.size() == count, "center count changed");
            expect(real_locus(cur) == type, "real locus changed");
            expect(forest_length(cur) == length - steps, "length did not drop by exactly 1");
        }
        expect(steps == length, "step count != initial length");
        expect(forest_length(cur) == 0, "final forest not flat");

        auto [flat, trace] = forest_reduce(m);
        expect(trace.steps.size() == length, "trace length mismatch");
        expect(forest_length(flat) == 0, "forest_reduce left edges");
    }
    return "100 forests, length <= 6";
}

// --------------------------------------------------------------------------
// 6. Classification table and Hirzebruch parity
// --------------------------------------------------------------------------
std::string criterion_classification() {
    for (unsigned g = 2; g <= 5; ++g) {
        expect(!canonical_model(SurfaceType::orientable(g)).has_value(),
               "genus " + std::to_string(g) + " should have no model");
    }
    auto sphere = canonical_model(SurfaceType::orientable(0));
    expect(sphere && sphere->base == BaseSurface::Sphere && sphere->centers.empty(),
           "sphere model");
    auto torus = canonical_model(SurfaceType::orientable(1));
    expect(torus && torus->base == BaseSurface::P1xP1 && torus->centers.empty(), "torus model");
    auto plane = canonical_model(SurfaceType::nonorientable(1));
    expect(plane && plane->base == BaseSurface::P2 && plane->centers.empty(), "P2 model");
    auto klein = canonical_model(SurfaceType::nonorientable(2));
    expect(klein && klein->base == BaseSurface::Hirzebruch && klein->hirzebruch_degree == 1 &&
               klein->centers.empty(),
           "Klein bottle model");
    for (unsigned k = 3; k <= 8; ++k) {
        auto m = canonical_model(SurfaceType::nonorientable(k));
        expect(m && m->base == BaseSurface::P1xP1 && m->centers.size() == k - 2,
               "nonorientable(" + std::to_string(k) + ") model");
        expect(real_locus(*m) == SurfaceType::nonorientable(k), "canonical model type mismatch");
    }
    for (unsigned d = 0; d <= 20; ++d) {
        expect(hirzebruch_normalize(d).representative == d % 2, "parity mismatch");
        if (d + 2 <= 20) {
            expect(hirzebruch_normalize(d).representative ==
                       hirzebruch_normalize(d + 2).representative,
                   "parity not stable under +2");
        }
    }
    return "full table + parity for d <= 20";
}

// --------------------------------------------------------------------------
// 7. Conic / six-point configuration
// --------------------------------------------------------------------------
std::string criterion_conic_configuration() {
    Rng rng(701);
    int done = 0;
    while (done < 100) {
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
            for (const auto& p : pts) {
                expect(c.evaluate(p).is_zero(), "nonzero incidence residual");
            }
            ++done;
        } catch (const std::domain_error&) {
            continue;  // degenerate draw, not general position
        }
    }

    // six points sampled from the conic [1 : t : t^2] violate condition 2
    auto parab = [](long t) {
        return GaussianPoint2(GaussianRational(BigRational(1), BigRational(0)),
                              GaussianRational(BigRational(t), BigRational(0)),
                              GaussianRational(BigRational(t * t), BigRational(0)));
    };
    std::array<GaussianPoint2, 6> on_conic = {parab(0), parab(1),  parab(2),
                                              parab(3), parab(-1), parab(-2)};
    ConfigReport bad = validate_six_config(on_conic);
    expect(!bad.no_common_conic, "points on a conic were not rejected");
    expect(!bad.valid(), "configuration on a conic validated");

    const auto& good = find_six_point_configuration();
    expect(good.has_value(), "exact search found no configuration");
    ConfigReport report = validate_six_config(*good);
    expect(report.conjugation_closed, "search result not conjugation closed");
    expect(report.no_common_conic, "search result lies on a conic");
    expect(report.five_point_conics_nonsingular, "search result has a singular 5-point conic");
    return "100 conics + rejection + exhibited configuration";
}

// --------------------------------------------------------------------------
// 8. P^2 <-> torus transfer
// --------------------------------------------------------------------------
std::string criterion_transfer() {
    Rng rng(801);
    std::uniform_int_distribution<long> c(-30, 30);
    auto rand_p2 = [&]() {
        while (true) {
            BigInt x(c(rng)), y(c(rng)), z(c(rng));
            if (x.is_zero() && y.is_zero() && z.is_zero()) continue;
            return ProjPoint2(x, y, z);
        }
    };

    int done = 0;
    while (done < 500) {
        ProjPoint2 p1 = rand_p2();
        ProjPoint2 p2 = rand_p2();
        if (p1 == p2) continue;
        Line2 l = line_through(p1, p2);
        TorusTransfer t = p2_to_torus(p1, p2, l);
        for (int k = 0; k < 10 && done < 500; ++k) {
            ProjPoint2 r = rand_p2();
            if (l.incidence(r).is_zero()) continue;
            expect(t.inverse(t.forward(r)) == r, "transfer round trip mismatch");
            // and the torus-side composition, off the exceptional fibers
            TorusPoint u{ProjPoint1(BigInt(c(rng)), BigInt(1)), ProjPoint1(BigInt(c(rng)), BigInt(1))};
            TorusPoint image = t.forward(t.inverse(u));
            expect(image == u, "torus-side round trip mismatch");
            ++done;
        }
        bool threw = false;
        try {
            t.forward(p1);
        } catch (const std::domain_error& e) {
            threw = std::string(e.what()) == "indeterminate or contracted locus";
        }
        expect(threw, "no error at an indeterminate point");
    }

    // contracted line and exceptional fibers on a fixed frame
    ProjPoint2 p1(BigInt(1), BigInt(0), BigInt(0)), p2(BigInt(0), BigInt(1), BigInt(0));
    Line2 l(BigInt(0), BigInt(0), BigInt(1));
    TorusTransfer t = p2_to_torus(p1, p2, l);
    for (const ProjPoint2& bad : {p1, p2, ProjPoint2(BigInt(1), BigInt(7), BigInt(0))}) {
        bool threw = false;
        try {
            t.forward(bad);
        } catch (const std::domain_error&) {
            threw = true;
        }
        expect(threw, "excluded locus did not raise");
    }
    bool fiber_threw = false;
    try {
        t.inverse(TorusPoint{ProjPoint1::infinity(), ProjPoint1(BigInt(2), BigInt(1))});
    } catch (const std::domain_error&) {
        fiber_threw = true;
    }
    expect(fiber_threw, "exceptional fiber did not raise");
    return "500 exact round trips + excluded-locus errors";
}

struct Criterion {
    int id;
    std::string name;
    std::function<std::string()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "interpolation suite", criterion_interpolation},
        {2, "transitivity suite", criterion_transitivity},
        {3, "Sturm factored-root oracle", criterion_sturm_oracle},
        {4, "inversion round trips", criterion_inversion},
        {5, "forest reduction", criterion_forest_reduction},
        {6, "classification table", criterion_classification},
        {7, "conic and six-point configuration", criterion_conic_configuration},
        {8, "P2-torus transfer", criterion_transfer},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        auto start = Clock::now();
        std::string note;
        bool ok = true;
        try {
            note = c.run();
        } catch (const Failure& f) {
            ok = false;
            note = f.what;
        } catch (const std::exception& e) {
            ok = false;
            note = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(Clock::now() - start).count();
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << (ok ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": " << c.name << " — "
             << note << " (" << secs << " s)";
        std::cout << line.str() << std::endl;
        if (!ok) ++failures;
    }
    if (failures == 0) {
        std::cout << "all 8 acceptance criteria passed" << std::endl;
    } else {
        std::cout << failures << " acceptance criteria FAILED" << std::endl;
    }
    return failures;
}
