#include "ratsurf/torus.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace ratsurf {

// ---------------------------------------------------------------------------
// ProjPoint1 / TorusPoint
// ---------------------------------------------------------------------------

ProjPoint1::ProjPoint1(BigInt a, BigInt b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_.is_zero() && b_.is_zero()) {
        throw std::invalid_argument("projective point must be nonzero");
    }
    BigInt g = BigInt::gcd(a_, b_);
    if (g != BigInt(1)) {
        a_ = BigInt::div_exact(a_, g);
        b_ = BigInt::div_exact(b_, g);
    }
    const int lead = a_.is_zero() ? b_.sign() : a_.sign();
    if (lead < 0) {
        a_ = -a_;
        b_ = -b_;
    }
}

ProjPoint1 ProjPoint1::from_rational(const BigRational& t) { return ProjPoint1(t.num(), t.den()); }

ProjPoint1 ProjPoint1::from_ratio(const BigRational& x, const BigRational& y) {
    return ProjPoint1(x.num() * y.den(), y.num() * x.den());
}

BigRational ProjPoint1::affine() const {
    if (is_infinite()) throw std::domain_error("point at infinity has no affine value");
    return BigRational(a_, b_);
}

std::string ProjPoint1::to_string() const { return "[" + a_.to_string() + ":" + b_.to_string() + "]"; }

std::string TorusPoint::to_string() const { return "(" + x.to_string() + ", " + y.to_string() + ")"; }

// ---------------------------------------------------------------------------
// FiberScale
// ---------------------------------------------------------------------------

FiberScale::FiberScale(Axis axis, Poly p, Poly q) {
    axis_ = axis;
    p_ = std::move(p);
    q_ = std::move(q);
    if (p_.is_zero() || q_.is_zero() || p_.degree() != q_.degree()) {
        throw std::invalid_argument("fiber scale polynomials must have equal degree");
    }
    if (p_.leading().sign() <= 0 || q_.leading().sign() <= 0) {
        throw std::invalid_argument("fiber scale polynomials must have positive leading coefficients");
    }
    if (count_real_roots(p_) != 0 || count_real_roots(q_) != 0) {
        throw std::invalid_argument("fiber scale polynomials must have no real zeros");
    }
    build_cache();
}

FiberScale FiberScale::unchecked(Axis axis, Poly p, Poly q) {
    FiberScale s;
    s.axis_ = axis;
    s.p_ = std::move(p);
    s.q_ = std::move(q);
    s.build_cache();
    return s;
}

void FiberScale::build_cache() {
    deg_ = std::max({p_.degree(), q_.degree(), 0});
    BigInt l(1);
    for (const auto& c : p_.coeffs()) l = BigInt::lcm(l, c.den());
    for (const auto& c : q_.coeffs()) l = BigInt::lcm(l, c.den());
    const BigRational scale{l};
    hp_.assign(deg_ + 1, BigInt(0));
    hq_.assign(deg_ + 1, BigInt(0));
    for (int i = 0; i <= deg_; ++i) {
        hp_[i] = (p_.coeff(i) * scale).num();
        hq_[i] = (q_.coeff(i) * scale).num();
    }
    BigInt g(0);
    for (const auto& z : hp_) g = BigInt::gcd(g, z);
    for (const auto& z : hq_) g = BigInt::gcd(g, z);
    if (g > BigInt(1)) {
        for (auto& z : hp_) z = BigInt::div_exact(z, g);
        for (auto& z : hq_) z = BigInt::div_exact(z, g);
    }
}

std::pair<BigInt, BigInt> FiberScale::factor(const ProjPoint1& t) const {
    std::vector<BigInt> pa(deg_ + 1, BigInt(1)), pb(deg_ + 1, BigInt(1));
    for (int i = 1; i <= deg_; ++i) {
        pa[i] = pa[i - 1] * t.a();
        pb[i] = pb[i - 1] * t.b();
    }
    BigInt num(0), den(0);
    for (int i = 0; i <= deg_; ++i) {
        BigInt m = pa[i] * pb[deg_ - i];
        num += hp_[i] * m;
        den += hq_[i] * m;
    }
    return {num, den};
}

// ---------------------------------------------------------------------------
// Moebius moves
// ---------------------------------------------------------------------------

ProjPoint1 Mat2::apply(const ProjPoint1& t) const {
    const BigRational ta{t.a()};
    const BigRational tb{t.b()};
    const BigRational u = a * ta + b * tb;
    const BigRational v = c * ta + d * tb;
    return ProjPoint1(u.num() * v.den(), v.num() * u.den());
}

Mat2 operator*(const Mat2& m, const Mat2& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
            m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

MoebiusPair::MoebiusPair(Mat2 mx, Mat2 my) : mx_(std::move(mx)), my_(std::move(my)) {
    if (mx_.det().is_zero() || my_.det().is_zero()) {
        throw std::invalid_argument("moebius matrix must be invertible");
    }
}

MoebiusPair MoebiusPair::unchecked(Mat2 mx, Mat2 my) {
    MoebiusPair m;
    m.mx_ = std::move(mx);
    m.my_ = std::move(my);
    return m;
}

TorusPoint MoebiusPair::apply(const TorusPoint& pt) const {
    return {mx_.apply(pt.x), my_.apply(pt.y)};
}

// ---------------------------------------------------------------------------
// Map application and inversion
// ---------------------------------------------------------------------------

TorusPoint apply_move(const TorusMove& move, const TorusPoint& pt) {
    if (const auto* s = std::get_if<FiberScale>(&move)) {
        if (s->axis() == FiberScale::Axis::ScaleY) {
            auto [num, den] = s->factor(pt.x);
            return {pt.x, ProjPoint1(num * pt.y.a(), den * pt.y.b())};
        }
        auto [num, den] = s->factor(pt.y);
        return {ProjPoint1(num * pt.x.a(), den * pt.x.b()), pt.y};
    }
    return std::get<MoebiusPair>(move).apply(pt);
}

TorusPoint apply(const TorusMap& f, const TorusPoint& pt) {
    TorusPoint cur = pt;
    for (const auto& move : f.moves) cur = apply_move(move, cur);
    return cur;
}

namespace {

TorusMove invert_move(const TorusMove& move) {
    if (const auto* s = std::get_if<FiberScale>(&move)) return s->inverted();
    return std::get<MoebiusPair>(move).inverted();
}

void require_distinct(const std::vector<TorusPoint>& points) {
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (points[i] == points[j]) throw std::invalid_argument("points not distinct");
        }
    }
}

}  // namespace

TorusMap invert(const TorusMap& f) {
    TorusMap g;
    g.moves.reserve(f.moves.size());
    for (auto it = f.moves.rbegin(); it != f.moves.rend(); ++it) {
        g.moves.push_back(invert_move(*it));
    }
    return g;
}

// ---------------------------------------------------------------------------
// Quadrant normalization
// ---------------------------------------------------------------------------

namespace {

Mat2 factor_normalizer(const std::vector<ProjPoint1>& coords) {
    // t0 not among the coordinates, scanned as infinity, 0, 1, 2, ...
    Mat2 send = Mat2::identity();
    const bool any_infinite =
        std::any_of(coords.begin(), coords.end(), [](const ProjPoint1& p) { return p.is_infinite(); });
    if (any_infinite) {
        long k = 0;
        while (true) {
            ProjPoint1 cand(BigInt(k), BigInt(1));
            if (std::none_of(coords.begin(), coords.end(),
                             [&](const ProjPoint1& p) { return p == cand; })) {
                break;
            }
            ++k;
        }
        // t -> 1/(t - k) sends k to infinity and infinity to 0
        send = Mat2{BigRational(0), BigRational(1), BigRational(1), BigRational(-k)};
    }
    bool first = true;
    BigRational low;
    for (const auto& c : coords) {
        BigRational v = send.apply(c).affine();
        if (first || v < low) {
            low = v;
            first = false;
        }
    }
    const Mat2 translate{BigRational(1), BigRational(1) - low, BigRational(0), BigRational(1)};
    return translate * send;
}

}  // namespace

std::pair<MoebiusPair, std::vector<TorusPoint>> quadrant_normalize(
    const std::vector<TorusPoint>& points) {
    require_distinct(points);
    std::vector<ProjPoint1> xs, ys;
    xs.reserve(points.size());
    ys.reserve(points.size());
    for (const auto& p : points) {
        xs.push_back(p.x);
        ys.push_back(p.y);
    }
    MoebiusPair mu(factor_normalizer(xs), factor_normalizer(ys));
    std::vector<TorusPoint> images;
    images.reserve(points.size());
    for (const auto& p : points) {
        TorusPoint q = mu.apply(p);
        if (q.x.is_infinite() || q.y.is_infinite() || q.x.affine() < BigRational(1) ||
            q.y.affine() < BigRational(1)) {
            throw std::logic_error("quadrant normalization postcondition failed");
        }
        images.push_back(std::move(q));
    }
    return {mu, images};
}

// ---------------------------------------------------------------------------
// Phase 1: make second coordinates distinct
// ---------------------------------------------------------------------------

FiberScale separate_y(const std::vector<TorusPoint>& points) {
    if (points.empty()) throw std::invalid_argument("at least one point required");
    require_distinct(points);
    for (const auto& p : points) {
        if (p.x.is_infinite() || p.y.is_infinite() || p.x.affine().sign() <= 0 ||
            p.y.affine().sign() <= 0) {
            throw std::invalid_argument("points must have finite positive coordinates");
        }
    }

    // group by first coordinate, ascending
    std::map<BigRational, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < points.size(); ++i) {
        groups[points[i].x.affine()].push_back(i);
    }

    BigRational ymin = points[0].y.affine();
    BigRational ymax = ymin;
    for (const auto& p : points) {
        BigRational v = p.y.affine();
        if (v < ymin) ymin = v;
        if (v > ymax) ymax = v;
    }
    const BigRational separation = BigRational(1) + ymax / ymin;

    std::vector<BigRational> nodes, nums, dens;
    long j = 1;
    for (const auto& [x, idxs] : groups) {
        nodes.push_back(x);
        nums.push_back(separation.pow(j));
        dens.push_back(BigRational(1));
        ++j;
    }
    PositiveRatio pr = positive_ratio_interpolate(nodes, nums, dens);
    FiberScale move(FiberScale::Axis::ScaleY, pr.p, pr.q);

    std::set<BigRational> seen;
    for (const auto& p : points) {
        seen.insert(apply_move(TorusMove(move), p).y.affine());
    }
    if (seen.size() != points.size()) throw std::logic_error("separate_y postcondition failed");
    return move;
}

// ---------------------------------------------------------------------------
// Transitivity constructor
// ---------------------------------------------------------------------------

namespace {

/// Moves sending the given distinct points to the grid (1,1), ..., (n,n),
/// in input order.
std::vector<TorusMove> grid_pipeline(const std::vector<TorusPoint>& input) {
    std::vector<TorusMove> moves;
    auto [mu, pts] = quadrant_normalize(input);
    moves.emplace_back(mu);

    FiberScale g1 = separate_y(pts);
    for (auto& p : pts) p = apply_move(TorusMove(g1), p);
    moves.emplace_back(std::move(g1));

    const std::size_t n = pts.size();
    {
        // x_i -> i via factors i/x_i interpolated over the distinct y's
        std::vector<BigRational> nodes, nums, dens;
        for (std::size_t k = 0; k < n; ++k) {
            nodes.push_back(pts[k].y.affine());
            nums.push_back(BigRational(static_cast<long>(k) + 1));
            dens.push_back(pts[k].x.affine());
        }
        PositiveRatio pr = positive_ratio_interpolate(nodes, nums, dens);
        FiberScale g2(FiberScale::Axis::ScaleX, pr.p, pr.q);
        for (std::size_t k = 0; k < n; ++k) {
            pts[k] = apply_move(TorusMove(g2), pts[k]);
            if (pts[k].x != ProjPoint1(BigInt(static_cast<long>(k) + 1), BigInt(1))) {
                throw std::logic_error("phase 2 postcondition failed");
            }
        }
        moves.emplace_back(std::move(g2));
    }
    {
        // y_i -> i at x = i
        std::vector<BigRational> nodes, nums, dens;
        for (std::size_t k = 0; k < n; ++k) {
            nodes.push_back(BigRational(static_cast<long>(k) + 1));
            nums.push_back(BigRational(static_cast<long>(k) + 1));
            dens.push_back(pts[k].y.affine());
        }
        PositiveRatio pr = positive_ratio_interpolate(nodes, nums, dens);
        FiberScale g3(FiberScale::Axis::ScaleY, pr.p, pr.q);
        for (std::size_t k = 0; k < n; ++k) {
            pts[k] = apply_move(TorusMove(g3), pts[k]);
            ProjPoint1 expect(BigInt(static_cast<long>(k) + 1), BigInt(1));
            if (pts[k].x != expect || pts[k].y != expect) {
                throw std::logic_error("phase 3 postcondition failed");
            }
        }
        moves.emplace_back(std::move(g3));
    }
    return moves;
}

}  // namespace

TorusMap build_transitivity_map(const std::vector<TorusPoint>& sources,
                                const std::vector<TorusPoint>& targets) {
    if (sources.size() != targets.size()) {
        throw std::invalid_argument("sources and targets must have equal length");
    }
    if (sources.empty()) throw std::invalid_argument("at least one point pair required");
    require_distinct(sources);
    require_distinct(targets);

    TorusMap f;
    f.moves = grid_pipeline(sources);
    std::vector<TorusMove> back = grid_pipeline(targets);
    for (auto it = back.rbegin(); it != back.rend(); ++it) {
        f.moves.push_back(invert_move(*it));
    }

    for (std::size_t i = 0; i < sources.size(); ++i) {
        if (apply(f, sources[i]) != targets[i]) {
            throw std::logic_error("transitivity postcondition failed");
        }
    }
    return f;
}

// ---------------------------------------------------------------------------
// Certification
// ---------------------------------------------------------------------------

MoveCheck check_move(const TorusMove& move, std::size_t index) {
    MoveCheck mc;
    mc.index = index;
    if (const auto* s = std::get_if<FiberScale>(&move)) {
        mc.kind = s->axis() == FiberScale::Axis::ScaleY ? "scale_y" : "scale_x";
        std::string why;
        const Poly& p = s->numerator();
        const Poly& q = s->denominator();
        if (p.is_zero() || q.is_zero()) {
            why = "zero polynomial";
        } else if (p.degree() != q.degree()) {
            why = "degrees differ";
        } else if (p.leading().sign() <= 0) {
            why = "p leading coefficient not positive";
        } else if (q.leading().sign() <= 0) {
            why = "q leading coefficient not positive";
        } else {
            long rp = count_real_roots(p);
            if (rp != 0) {
                why = "p has " + std::to_string(rp) + " real zeros";
            } else {
                long rq = count_real_roots(q);
                if (rq != 0) why = "q has " + std::to_string(rq) + " real zeros";
            }
        }
        mc.ok = why.empty();
        mc.detail = why;
    } else {
        const auto& m = std::get<MoebiusPair>(move);
        mc.kind = "moebius";
        if (m.mx().det().is_zero()) {
            mc.ok = false;
            mc.detail = "mx determinant is zero";
        } else if (m.my().det().is_zero()) {
            mc.ok = false;
            mc.detail = "my determinant is zero";
        }
    }
    return mc;
}

Certificate certify(const TorusMap& f) {
    Certificate cert;
    for (std::size_t i = 0; i < f.moves.size(); ++i) {
        MoveCheck mc = check_move(f.moves[i], i);
        if (!mc.ok && !cert.first_invalid) cert.first_invalid = i;
        cert.valid = cert.valid && mc.ok;
        cert.moves.push_back(std::move(mc));
    }
    return cert;
}

}  // namespace ratsurf
