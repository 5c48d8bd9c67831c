#pragma once

#include <vector>

#include "ratsurf/poly.hpp"
#include "ratsurf/torus.hpp"

namespace ratsurf {

/// Execution mode for the batch kernels. Every value is immutable and every
/// operation pure, so the parallel paths need no locking; Serial is the
/// reference implementation the parallel results are checked against.
enum class ExecMode { Serial, Parallel };

/// Images of many points under one map.
std::vector<TorusPoint> batch_apply(const TorusMap& f, const std::vector<TorusPoint>& points,
                                    ExecMode mode);

/// Round trip f^{-1}(f(pt)) for many points (the inversion workload).
std::vector<TorusPoint> batch_round_trip(const TorusMap& f, const std::vector<TorusPoint>& points,
                                         ExecMode mode);

/// Certificate with the per-move checks fanned out across threads.
Certificate certify_map(const TorusMap& f, ExecMode mode);

/// Certificates for many maps.
std::vector<Certificate> batch_certify(const std::vector<TorusMap>& maps, ExecMode mode);

/// Whole-line real-root counts for many polynomials.
std::vector<long> batch_count_real_roots(const std::vector<Poly>& polys, ExecMode mode);

/// True when the library was built with OpenMP.
bool parallel_enabled();

}  // namespace ratsurf
