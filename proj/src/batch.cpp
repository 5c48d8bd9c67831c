#include "ratsurf/batch.hpp"

#include <cstddef>

namespace ratsurf {

bool parallel_enabled() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

std::vector<TorusPoint> batch_apply(const TorusMap& f, const std::vector<TorusPoint>& points,
                                    ExecMode mode) {
    std::vector<TorusPoint> out(points.size());
    if (mode == ExecMode::Serial) {
        for (std::size_t i = 0; i < points.size(); ++i) out[i] = apply(f, points[i]);
        return out;
    }
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(points.size()); ++i) {
        out[i] = apply(f, points[i]);
    }
    return out;
}

std::vector<TorusPoint> batch_round_trip(const TorusMap& f, const std::vector<TorusPoint>& points,
                                         ExecMode mode) {
    const TorusMap inv = invert(f);
    std::vector<TorusPoint> out(points.size());
    if (mode == ExecMode::Serial) {
        for (std::size_t i = 0; i < points.size(); ++i) {
            out[i] = apply(inv, apply(f, points[i]));
        }
        return out;
    }
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(points.size()); ++i) {
        out[i] = apply(inv, apply(f, points[i]));
    }
    return out;
}

Certificate certify_map(const TorusMap& f, ExecMode mode) {
    if (mode == ExecMode::Serial) return certify(f);
    std::vector<MoveCheck> checks(f.moves.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(f.moves.size()); ++i) {
        checks[i] = check_move(f.moves[i], static_cast<std::size_t>(i));
    }
    Certificate cert;
    for (auto& mc : checks) {
        if (!mc.ok && !cert.first_invalid) cert.first_invalid = mc.index;
        cert.valid = cert.valid && mc.ok;
        cert.moves.push_back(std::move(mc));
    }
    return cert;
}

std::vector<Certificate> batch_certify(const std::vector<TorusMap>& maps, ExecMode mode) {
    std::vector<Certificate> out(maps.size());
    if (mode == ExecMode::Serial) {
        for (std::size_t i = 0; i < maps.size(); ++i) out[i] = certify(maps[i]);
        return out;
    }
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(maps.size()); ++i) {
        out[i] = certify(maps[i]);
    }
    return out;
}

std::vector<long> batch_count_real_roots(const std::vector<Poly>& polys, ExecMode mode) {
    std::vector<long> out(polys.size());
    if (mode == ExecMode::Serial) {
        for (std::size_t i = 0; i < polys.size(); ++i) out[i] = count_real_roots(polys[i]);
        return out;
    }
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(polys.size()); ++i) {
        out[i] = count_real_roots(polys[i]);
    }
    return out;
}

}  // namespace ratsurf
