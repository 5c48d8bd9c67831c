#include "ratsurf/models.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace ratsurf {

SurfaceType SurfaceType::nonorientable(unsigned crosscaps) {
    if (crosscaps == 0) throw std::invalid_argument("nonorientable surface needs >= 1 cross-cap");
    return {Kind::Nonorientable, crosscaps};
}

std::string SurfaceType::to_string() const {
    if (kind == Kind::Orientable) return "OrientableGenus(" + std::to_string(param) + ")";
    return "Nonorientable(" + std::to_string(param) + ")";
}

std::string to_string(BaseSurface base, unsigned hirzebruch_degree) {
    switch (base) {
        case BaseSurface::P2: return "P2";
        case BaseSurface::Sphere: return "S2";
        case BaseSurface::P1xP1: return "P1xP1";
        case BaseSurface::Hirzebruch: return "F" + std::to_string(hirzebruch_degree);
    }
    return "?";
}

std::string to_string(CenterKind kind) {
    return kind == CenterKind::RealPoint ? "real" : "pair";
}

void BlowUpModel::validate() const {
    std::set<std::string> seen;
    for (std::size_t i = 0; i < centers.size(); ++i) {
        const Center& c = centers[i];
        if (c.id.empty()) throw std::invalid_argument("center id must be nonempty");
        if (!seen.insert(c.id).second) {
            throw std::invalid_argument("duplicate center id '" + c.id + "'");
        }
        if (c.parent) {
            std::size_t pidx = centers.size();
            for (std::size_t j = 0; j < i; ++j) {
                if (centers[j].id == *c.parent) {
                    pidx = j;
                    break;
                }
            }
            if (pidx == centers.size()) {
                throw std::invalid_argument("parent '" + *c.parent + "' must precede center '" +
                                            c.id + "'");
            }
            if (centers[pidx].kind == CenterKind::ConjugatePair &&
                c.kind == CenterKind::RealPoint) {
                throw std::invalid_argument(
                    "real center cannot lie on a conjugate-pair exceptional divisor");
            }
        }
    }
}

std::string BlowUpModel::to_string() const {
    std::string out = "base " + ratsurf::to_string(base, hirzebruch_degree);
    if (!centers.empty()) {
        out += "; centers [";
        for (std::size_t i = 0; i < centers.size(); ++i) {
            if (i > 0) out += ", ";
            out += centers[i].id + "(" + ratsurf::to_string(centers[i].kind);
            if (centers[i].parent) out += ", parent=" + *centers[i].parent;
            out += ")";
        }
        out += "]";
    }
    return out;
}

namespace {

struct Tokenizer {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    std::string word() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
            ++pos;
        }
        return s.substr(start, pos - start);
    }
};

[[noreturn]] void parse_fail(const std::string& text, const std::string& why) {
    throw std::invalid_argument("model parse error: " + why + " in '" + text + "'");
}

}  // namespace

BlowUpModel BlowUpModel::parse(const std::string& text) {
    Tokenizer tk{text};
    if (tk.word() != "base") parse_fail(text, "expected 'base'");
    std::string base = tk.word();
    BlowUpModel model;
    if (base == "P2") {
        model.base = BaseSurface::P2;
    } else if (base == "S2") {
        model.base = BaseSurface::Sphere;
    } else if (base == "P1xP1") {
        model.base = BaseSurface::P1xP1;
    } else if (base.size() >= 2 && base[0] == 'F' &&
               std::all_of(base.begin() + 1, base.end(),
                           [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        model.base = BaseSurface::Hirzebruch;
        model.hirzebruch_degree = static_cast<unsigned>(std::stoul(base.substr(1)));
    } else {
        parse_fail(text, "unknown base '" + base + "'");
    }

    if (tk.done()) return model;
    if (!tk.eat(';')) parse_fail(text, "expected ';'");
    if (tk.word() != "centers") parse_fail(text, "expected 'centers'");
    if (!tk.eat('[')) parse_fail(text, "expected '['");
    if (!tk.eat(']')) {
        while (true) {
            std::string id = tk.word();
            if (id.empty()) parse_fail(text, "expected center id");
            if (!tk.eat('(')) parse_fail(text, "expected '('");
            std::string kind = tk.word();
            Center c;
            c.id = id;
            if (kind == "real") {
                c.kind = CenterKind::RealPoint;
            } else if (kind == "pair") {
                c.kind = CenterKind::ConjugatePair;
            } else {
                parse_fail(text, "unknown center kind '" + kind + "'");
            }
            if (tk.eat(',')) {
                if (tk.word() != "parent") parse_fail(text, "expected 'parent'");
                if (!tk.eat('=')) parse_fail(text, "expected '='");
                std::string parent = tk.word();
                if (parent.empty()) parse_fail(text, "expected parent id");
                c.parent = parent;
            }
            if (!tk.eat(')')) parse_fail(text, "expected ')'");
            model.centers.push_back(std::move(c));
            if (tk.eat(']')) break;
            if (!tk.eat(',')) parse_fail(text, "expected ',' or ']'");
        }
    }
    if (!tk.done()) parse_fail(text, "trailing input");
    model.validate();
    return model;
}

std::size_t forest_length(const BlowUpModel& model) {
    std::size_t edges = 0;
    for (const auto& c : model.centers) {
        if (c.parent) ++edges;
    }
    return edges;
}

std::optional<std::pair<BlowUpModel, std::pair<std::string, std::string>>> forest_reduce_step(
    const BlowUpModel& model) {
    auto is_root = [&](const std::string& id) {
        for (const auto& c : model.centers) {
            if (c.id == id) return !c.parent.has_value();
        }
        return false;
    };
    for (std::size_t i = 0; i < model.centers.size(); ++i) {
        const Center& c = model.centers[i];
        if (c.parent && is_root(*c.parent)) {
            BlowUpModel next = model;
            next.centers[i].parent.reset();
            return std::make_pair(std::move(next), std::make_pair(*c.parent, c.id));
        }
    }
    return std::nullopt;
}

std::pair<BlowUpModel, ReductionTrace> forest_reduce(const BlowUpModel& model) {
    model.validate();
    if (model.base != BaseSurface::P2) throw std::domain_error("normalize with classify first");
    for (const auto& c : model.centers) {
        if (c.kind != CenterKind::RealPoint) {
            throw std::domain_error("normalize with classify first");
        }
    }
    const std::size_t initial_length = forest_length(model);
    BlowUpModel current = model;
    ReductionTrace trace;
    while (auto step = forest_reduce_step(current)) {
        current = std::move(step->first);
        trace.steps.push_back(std::move(step->second));
        if (trace.steps.size() > initial_length) {
            throw std::logic_error("forest reduction exceeded the expected move count");
        }
    }
    if (trace.steps.size() != initial_length || forest_length(current) != 0) {
        throw std::logic_error("forest reduction did not flatten the forest");
    }
    return {std::move(current), std::move(trace)};
}

SurfaceType real_locus(const BlowUpModel& model) {
    model.validate();
    unsigned real_centers = 0;
    for (const auto& c : model.centers) {
        if (c.kind == CenterKind::RealPoint) ++real_centers;
    }
    SurfaceType base_type;
    switch (model.base) {
        case BaseSurface::Sphere:
            base_type = SurfaceType::orientable(0);
            break;
        case BaseSurface::P1xP1:
            base_type = SurfaceType::orientable(1);
            break;
        case BaseSurface::P2:
            base_type = SurfaceType::nonorientable(1);
            break;
        case BaseSurface::Hirzebruch:
            base_type = model.hirzebruch_degree % 2 == 0 ? SurfaceType::orientable(1)
                                                         : SurfaceType::nonorientable(2);
            break;
    }
    if (real_centers == 0) return base_type;
    // a real blow-up is a connected sum with P^2(R): sphere gains r cross-caps,
    // the torus becomes Nonorientable(r + 2), nonorientable bases add r
    unsigned crosscaps = 0;
    if (base_type.kind == SurfaceType::Kind::Orientable) {
        crosscaps = base_type.param == 0 ? real_centers : real_centers + 2;
    } else {
        crosscaps = base_type.param + real_centers;
    }
    return SurfaceType::nonorientable(crosscaps);
}

HirzebruchNormalForm hirzebruch_normalize(unsigned d) { return {d % 2, d / 2}; }

std::optional<BlowUpModel> canonical_model(const SurfaceType& s) {
    BlowUpModel model;
    if (s.kind == SurfaceType::Kind::Orientable) {
        if (s.param >= 2) return std::nullopt;
        model.base = s.param == 0 ? BaseSurface::Sphere : BaseSurface::P1xP1;
        return model;
    }
    if (s.param == 1) {
        model.base = BaseSurface::P2;
        return model;
    }
    if (s.param == 2) {
        model.base = BaseSurface::Hirzebruch;
        model.hirzebruch_degree = 1;
        return model;
    }
    model.base = BaseSurface::P1xP1;
    for (unsigned i = 1; i + 2 <= s.param; ++i) {
        model.centers.push_back(Center{"p" + std::to_string(i), CenterKind::RealPoint, {}});
    }
    return model;
}

bool models_isomorphic(const BlowUpModel& a, const BlowUpModel& b) {
    return real_locus(a) == real_locus(b);
}

}  // namespace ratsurf
