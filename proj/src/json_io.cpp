#include "ratsurf/json_io.hpp"

#include <stdexcept>

namespace ratsurf {

namespace {

const json& expect(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw std::invalid_argument(std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

std::string expect_string(const json& j) {
    if (!j.is_string()) throw std::invalid_argument("expected a string value");
    return j.get<std::string>();
}

BigInt int_from_json(const json& j) { return BigInt(expect_string(j)); }

}  // namespace

json to_json(const BigRational& v) { return v.to_string(); }

BigRational rational_from_json(const json& j) { return BigRational::parse(expect_string(j)); }

json to_json(const Poly& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.to_string());
    return arr;
}

Poly poly_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial must be an array of rationals");
    std::vector<BigRational> cs;
    cs.reserve(j.size());
    for (const auto& e : j) cs.push_back(rational_from_json(e));
    return Poly(std::move(cs));
}

json to_json(const ProjPoint1& p) {
    return json::array({p.a().to_string(), p.b().to_string()});
}

ProjPoint1 proj_point1_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) {
        throw std::invalid_argument("P^1 point must be a two-entry array of integer strings");
    }
    return ProjPoint1(int_from_json(j[0]), int_from_json(j[1]));
}

json to_json(const TorusPoint& p) {
    return json{{"x", to_json(p.x)}, {"y", to_json(p.y)}};
}

TorusPoint torus_point_from_json(const json& j) {
    return TorusPoint{proj_point1_from_json(expect(j, "x")), proj_point1_from_json(expect(j, "y"))};
}

namespace {

json mat2_to_json(const Mat2& m) {
    return json::array({json::array({m.a.to_string(), m.b.to_string()}),
                        json::array({m.c.to_string(), m.d.to_string()})});
}

Mat2 mat2_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
        !j[1].is_array() || j[1].size() != 2) {
        throw std::invalid_argument("matrix must be a 2x2 array of rational strings");
    }
    return Mat2{rational_from_json(j[0][0]), rational_from_json(j[0][1]),
                rational_from_json(j[1][0]), rational_from_json(j[1][1])};
}

}  // namespace

json to_json(const TorusMap& f) {
    json moves = json::array();
    for (const auto& move : f.moves) {
        if (const auto* s = std::get_if<FiberScale>(&move)) {
            moves.push_back(json{
                {"kind", s->axis() == FiberScale::Axis::ScaleY ? "scale_y" : "scale_x"},
                {"p", to_json(s->numerator())},
                {"q", to_json(s->denominator())}});
        } else {
            const auto& m = std::get<MoebiusPair>(move);
            moves.push_back(json{{"kind", "moebius"},
                                 {"mx", mat2_to_json(m.mx())},
                                 {"my", mat2_to_json(m.my())}});
        }
    }
    return json{{"moves", moves}};
}

TorusMap torus_map_from_json(const json& j) {
    const json& moves = expect(j, "moves");
    if (!moves.is_array()) throw std::invalid_argument("'moves' must be an array");
    TorusMap f;
    for (const auto& m : moves) {
        std::string kind = expect_string(expect(m, "kind"));
        if (kind == "scale_y" || kind == "scale_x") {
            f.moves.push_back(FiberScale::unchecked(
                kind == "scale_y" ? FiberScale::Axis::ScaleY : FiberScale::Axis::ScaleX,
                poly_from_json(expect(m, "p")), poly_from_json(expect(m, "q"))));
        } else if (kind == "moebius") {
            f.moves.push_back(MoebiusPair::unchecked(mat2_from_json(expect(m, "mx")),
                                                     mat2_from_json(expect(m, "my"))));
        } else {
            throw std::invalid_argument("unknown move kind '" + kind + "'");
        }
    }
    return f;
}

json to_json(const Certificate& c) {
    json moves = json::array();
    for (const auto& mc : c.moves) {
        moves.push_back(json{{"index", mc.index},
                             {"kind", mc.kind},
                             {"ok", mc.ok},
                             {"detail", mc.detail}});
    }
    json out{{"valid", c.valid}, {"moves", moves}};
    if (c.first_invalid) {
        out["first_invalid"] = *c.first_invalid;
    } else {
        out["first_invalid"] = nullptr;
    }
    return out;
}

json to_json(const ProjPoint2& p) {
    return json::array({p.x().to_string(), p.y().to_string(), p.z().to_string()});
}

ProjPoint2 proj_point2_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3) {
        throw std::invalid_argument("P^2 point must be a three-entry array of integer strings");
    }
    return ProjPoint2(int_from_json(j[0]), int_from_json(j[1]), int_from_json(j[2]));
}

json to_json(const Line2& l) {
    return json::array({l.l().to_string(), l.m().to_string(), l.n().to_string()});
}

Line2 line2_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3) {
        throw std::invalid_argument("line must be a three-entry array of integer strings");
    }
    return Line2(int_from_json(j[0]), int_from_json(j[1]), int_from_json(j[2]));
}

json to_json(const GaussianRational& g) {
    return json{{"re", g.re.to_string()}, {"im", g.im.to_string()}};
}

GaussianRational gaussian_from_json(const json& j) {
    return GaussianRational(BigRational::parse(expect_string(expect(j, "re"))),
                            BigRational::parse(expect_string(expect(j, "im"))));
}

json to_json(const GaussianPoint2& p) {
    return json::array({to_json(p.x()), to_json(p.y()), to_json(p.z())});
}

GaussianPoint2 gaussian_point2_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3) {
        throw std::invalid_argument("complex point must be a three-entry array");
    }
    return GaussianPoint2(gaussian_from_json(j[0]), gaussian_from_json(j[1]),
                          gaussian_from_json(j[2]));
}

json to_json(const Conic& c) {
    json rows = json::array();
    for (int i = 0; i < 3; ++i) {
        json row = json::array();
        for (int j2 = 0; j2 < 3; ++j2) row.push_back(to_json(c.matrix()[i][j2]));
        rows.push_back(row);
    }
    return json{{"matrix", rows}, {"singular", c.is_singular()}};
}

json to_json(const ConfigReport& r) {
    return json{{"conjugation_closed", r.conjugation_closed},
                {"no_common_conic", r.no_common_conic},
                {"five_point_conics_nonsingular", r.five_point_conics_nonsingular},
                {"subset_ok", r.subset_ok},
                {"valid", r.valid()}};
}

json to_json(const SurfaceType& s) { return s.to_string(); }

json to_json(const BlowUpModel& m) {
    json centers = json::array();
    for (const auto& c : m.centers) {
        json e{{"id", c.id}, {"kind", to_string(c.kind)}};
        if (c.parent) e["parent"] = *c.parent;
        centers.push_back(e);
    }
    return json{{"base", to_string(m.base, m.hirzebruch_degree)},
                {"centers", centers},
                {"text", m.to_string()}};
}

BlowUpModel model_from_json(const json& j) {
    BlowUpModel m;
    std::string base = expect_string(expect(j, "base"));
    if (base == "P2") {
        m.base = BaseSurface::P2;
    } else if (base == "S2") {
        m.base = BaseSurface::Sphere;
    } else if (base == "P1xP1") {
        m.base = BaseSurface::P1xP1;
    } else if (base.size() >= 2 && base[0] == 'F') {
        m.base = BaseSurface::Hirzebruch;
        m.hirzebruch_degree = static_cast<unsigned>(std::stoul(base.substr(1)));
    } else {
        throw std::invalid_argument("unknown base '" + base + "'");
    }
    if (j.contains("centers")) {
        for (const auto& e : j.at("centers")) {
            Center c;
            c.id = expect_string(expect(e, "id"));
            std::string kind = expect_string(expect(e, "kind"));
            if (kind == "real") {
                c.kind = CenterKind::RealPoint;
            } else if (kind == "pair") {
                c.kind = CenterKind::ConjugatePair;
            } else {
                throw std::invalid_argument("unknown center kind '" + kind + "'");
            }
            if (e.contains("parent") && !e.at("parent").is_null()) {
                c.parent = expect_string(e.at("parent"));
            }
            m.centers.push_back(std::move(c));
        }
    }
    m.validate();
    return m;
}

json to_json(const ReductionTrace& t) {
    json steps = json::array();
    for (const auto& [root, child] : t.steps) {
        steps.push_back(json::array({root, child}));
    }
    return steps;
}

}  // namespace ratsurf
