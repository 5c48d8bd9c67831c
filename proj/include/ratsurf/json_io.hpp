#pragma once

#include <json.hpp>

#include "ratsurf/models.hpp"
#include "ratsurf/projective.hpp"
#include "ratsurf/torus.hpp"

namespace ratsurf {

using json = nlohmann::json;

// All numeric payloads travel as strings so values stay exact at any size.

json to_json(const BigRational& v);
BigRational rational_from_json(const json& j);

json to_json(const Poly& p);
Poly poly_from_json(const json& j);

json to_json(const ProjPoint1& p);
ProjPoint1 proj_point1_from_json(const json& j);

json to_json(const TorusPoint& p);
TorusPoint torus_point_from_json(const json& j);

json to_json(const TorusMap& f);
/// Moves are reconstructed unchecked so `certify` can judge them.
TorusMap torus_map_from_json(const json& j);

json to_json(const Certificate& c);

json to_json(const ProjPoint2& p);
ProjPoint2 proj_point2_from_json(const json& j);

json to_json(const Line2& l);
Line2 line2_from_json(const json& j);

json to_json(const GaussianRational& g);
GaussianRational gaussian_from_json(const json& j);

json to_json(const GaussianPoint2& p);
GaussianPoint2 gaussian_point2_from_json(const json& j);

json to_json(const Conic& c);

json to_json(const ConfigReport& r);

json to_json(const SurfaceType& s);

json to_json(const BlowUpModel& m);
BlowUpModel model_from_json(const json& j);

json to_json(const ReductionTrace& t);

}  // namespace ratsurf
