#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ratsurf {

/// Topological type of a compact connected surface: orientable of genus g, or
/// the k-fold connected sum of real projective planes (k cross-caps).
struct SurfaceType {
    enum class Kind { Orientable, Nonorientable };

    Kind kind = Kind::Orientable;
    unsigned param = 0;

    static SurfaceType orientable(unsigned genus) { return {Kind::Orientable, genus}; }
    static SurfaceType nonorientable(unsigned crosscaps);

    friend bool operator==(const SurfaceType& a, const SurfaceType& b) {
        return a.kind == b.kind && a.param == b.param;
    }
    friend bool operator!=(const SurfaceType& a, const SurfaceType& b) { return !(a == b); }

    std::string to_string() const;
};

enum class CenterKind { RealPoint, ConjugatePair };

/// Blow-up center; a parent makes it infinitely near (it lies on the parent's
/// exceptional divisor).
struct Center {
    std::string id;
    CenterKind kind = CenterKind::RealPoint;
    std::optional<std::string> parent;

    friend bool operator==(const Center& a, const Center& b) {
        return a.id == b.id && a.kind == b.kind && a.parent == b.parent;
    }
};

enum class BaseSurface { P2, Sphere, P1xP1, Hirzebruch };

/// Base surface plus an ordered forest of (possibly infinitely near) blow-up
/// centers.
struct BlowUpModel {
    BaseSurface base = BaseSurface::P2;
    unsigned hirzebruch_degree = 0;  // meaningful only for Hirzebruch bases
    std::vector<Center> centers;

    /// Checks the forest conditions; throws std::invalid_argument on violation.
    void validate() const;

    friend bool operator==(const BlowUpModel& a, const BlowUpModel& b) {
        return a.base == b.base &&
               (a.base != BaseSurface::Hirzebruch || a.hirzebruch_degree == b.hirzebruch_degree) &&
               a.centers == b.centers;
    }

    std::string to_string() const;
    /// Parses the textual model grammar, e.g.
    /// "base P2; centers [a(real), b(real, parent=a)]" or "base F7".
    static BlowUpModel parse(const std::string& text);
};

/// One length-decreasing move per entry: (tree root id, detached depth-1 child id).
struct ReductionTrace {
    std::vector<std::pair<std::string, std::string>> steps;
};

/// Total edge count of the forest (= number of centers having a parent).
std::size_t forest_length(const BlowUpModel& model);

/// Applies one length-decreasing move when possible: detaches the first
/// depth-1 child of the first eligible root. Returns the new model and the
/// (root, child) pair, or nothing when the forest is already flat.
std::optional<std::pair<BlowUpModel, std::pair<std::string, std::string>>> forest_reduce_step(
    const BlowUpModel& model);

/// Flattens the forest in exactly forest_length(model) moves. Requires a P^2
/// base with real centers only; throws std::domain_error("normalize with
/// classify first") otherwise.
std::pair<BlowUpModel, ReductionTrace> forest_reduce(const BlowUpModel& model);

/// Topological type of the real locus.
SurfaceType real_locus(const BlowUpModel& model);

struct HirzebruchNormalForm {
    unsigned representative = 0;  // d mod 2
    unsigned moves = 0;           // F_d -> F_{d-2} moves applied
};

HirzebruchNormalForm hirzebruch_normalize(unsigned d);

/// The unique rational model of a surface type, when one exists.
std::optional<BlowUpModel> canonical_model(const SurfaceType& s);

/// Isomorphism of rational models, decided by the real-locus type.
bool models_isomorphic(const BlowUpModel& a, const BlowUpModel& b);

std::string to_string(BaseSurface base, unsigned hirzebruch_degree = 0);
std::string to_string(CenterKind kind);

}  // namespace ratsurf
