// Benchmark comparing the serial reference kernels against the OpenMP paths.

#include <chrono>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "ratsurf/batch.hpp"

using namespace ratsurf;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

BigRational rand_rational(std::mt19937_64& rng, long height) {
    std::uniform_int_distribution<long> num(-height, height);
    std::uniform_int_distribution<long> den(1, height);
    return BigRational(num(rng), den(rng));
}

Poly rand_factored_poly(std::mt19937_64& rng, int linear, int quadratic) {
    Poly p = Poly::constant(BigRational(1));
    for (int i = 0; i < linear; ++i) {
        p = p * Poly::linear_root(rand_rational(rng, 50));
    }
    for (int i = 0; i < quadratic; ++i) {
        BigRational b = rand_rational(rng, 20);
        BigRational c = b * b * BigRational(1, 4) + rand_rational(rng, 20).abs() + BigRational(1);
        p = p * Poly(std::vector<BigRational>{c, b, BigRational(1)});
    }
    return p;
}

TorusPoint rand_point(std::mt19937_64& rng, long height) {
    return TorusPoint{ProjPoint1::from_rational(rand_rational(rng, height)),
                      ProjPoint1::from_rational(rand_rational(rng, height))};
}

std::vector<TorusPoint> rand_distinct_points(std::mt19937_64& rng, std::size_t n, long height) {
    std::vector<TorusPoint> pts;
    while (pts.size() < n) {
        TorusPoint cand = rand_point(rng, height);
        bool dup = false;
        for (const auto& p : pts) dup = dup || p == cand;
        if (!dup) pts.push_back(cand);
    }
    return pts;
}

template <typename F>
double timed(F&& f) {
    auto start = Clock::now();
    f();
    return seconds_since(start);
}

void report(const std::string& name, double serial, double parallel) {
    std::cout << name << ": serial " << serial << " s, parallel " << parallel << " s, speedup "
              << (parallel > 0 ? serial / parallel : 0.0) << "x\n";
}

}  // namespace

int main(int argc, char** argv) {
    unsigned long seed = argc > 1 ? std::stoul(argv[1]) : 20240817UL;
    std::mt19937_64 rng(seed);
    std::cout << "OpenMP available: " << (parallel_enabled() ? "yes" : "no") << "\n";

    {
        std::vector<Poly> polys;
        std::uniform_int_distribution<int> lin(0, 6), quad(0, 3);
        for (int i = 0; i < 200; ++i) polys.push_back(rand_factored_poly(rng, lin(rng), quad(rng)));
        std::vector<long> serial_counts, parallel_counts;
        double ts = timed([&] { serial_counts = batch_count_real_roots(polys, ExecMode::Serial); });
        double tp =
            timed([&] { parallel_counts = batch_count_real_roots(polys, ExecMode::Parallel); });
        if (serial_counts != parallel_counts) {
            std::cerr << "MISMATCH in root counts\n";
            return 1;
        }
        report("sturm count (200 polynomials)", ts, tp);
    }

    {
        auto sources = rand_distinct_points(rng, 3, 20);
        auto targets = rand_distinct_points(rng, 3, 20);
        TorusMap f = build_transitivity_map(sources, targets);
        std::vector<TorusPoint> pts;
        for (int i = 0; i < 64; ++i) pts.push_back(rand_point(rng, 20));
        std::vector<TorusPoint> a, b;
        double ts = timed([&] { a = batch_apply(f, pts, ExecMode::Serial); });
        double tp = timed([&] { b = batch_apply(f, pts, ExecMode::Parallel); });
        if (a != b) {
            std::cerr << "MISMATCH in batch apply\n";
            return 1;
        }
        report("apply (n=3 map, 64 points)", ts, tp);

        std::vector<TorusMap> maps(8, f);
        std::vector<Certificate> cs, cp;
        double ts2 = timed([&] { cs = batch_certify(maps, ExecMode::Serial); });
        double tp2 = timed([&] { cp = batch_certify(maps, ExecMode::Parallel); });
        bool same = cs.size() == cp.size();
        for (std::size_t i = 0; same && i < cs.size(); ++i) same = cs[i].valid == cp[i].valid;
        if (!same) {
            std::cerr << "MISMATCH in certification\n";
            return 1;
        }
        report("certify (8 maps)", ts2, tp2);
    }

    return 0;
}
