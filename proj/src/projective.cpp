#include "ratsurf/projective.hpp"

#include <stdexcept>

namespace ratsurf {

// ---------------------------------------------------------------------------
// Gaussian rationals
// ---------------------------------------------------------------------------

GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
}

GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
}

GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    BigRational norm = b.re * b.re + b.im * b.im;
    GaussianRational num = a * b.conj();
    return {num.re / norm, num.im / norm};
}

GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }

std::string GaussianRational::to_string() const {
    if (im.is_zero()) return re.to_string();
    std::string s = re.to_string();
    if (im.sign() >= 0) s += "+";
    s += im.to_string() + "i";
    return s;
}

// ---------------------------------------------------------------------------
// Points and lines
// ---------------------------------------------------------------------------

namespace {

void canonicalize_triple(std::array<BigInt, 3>& c) {
    if (c[0].is_zero() && c[1].is_zero() && c[2].is_zero()) {
        throw std::invalid_argument("projective point must be nonzero");
    }
    BigInt g = BigInt::gcd(BigInt::gcd(c[0], c[1]), c[2]);
    if (g != BigInt(1)) {
        for (auto& v : c) v = BigInt::div_exact(v, g);
    }
    int lead = 0;
    for (const auto& v : c) {
        if (!v.is_zero()) {
            lead = v.sign();
            break;
        }
    }
    if (lead < 0) {
        for (auto& v : c) v = -v;
    }
}

}  // namespace

ProjPoint2::ProjPoint2(BigInt x, BigInt y, BigInt z) : c_{std::move(x), std::move(y), std::move(z)} {
    canonicalize_triple(c_);
}

std::string ProjPoint2::to_string() const {
    return "[" + c_[0].to_string() + ":" + c_[1].to_string() + ":" + c_[2].to_string() + "]";
}

GaussianPoint2::GaussianPoint2(GaussianRational x, GaussianRational y, GaussianRational z)
    : c_{std::move(x), std::move(y), std::move(z)} {
    std::size_t lead = 3;
    for (std::size_t i = 0; i < 3; ++i) {
        if (!c_[i].is_zero()) {
            lead = i;
            break;
        }
    }
    if (lead == 3) throw std::invalid_argument("projective point must be nonzero");
    GaussianRational pivot = c_[lead];
    for (auto& v : c_) v = v / pivot;
}

GaussianPoint2::GaussianPoint2(const ProjPoint2& p)
    : GaussianPoint2(GaussianRational(BigRational(p.x()), BigRational(0)),
                     GaussianRational(BigRational(p.y()), BigRational(0)),
                     GaussianRational(BigRational(p.z()), BigRational(0))) {}

GaussianPoint2 GaussianPoint2::conj() const {
    return GaussianPoint2(c_[0].conj(), c_[1].conj(), c_[2].conj());
}

bool GaussianPoint2::is_real() const {
    return c_[0].is_real() && c_[1].is_real() && c_[2].is_real();
}

std::string GaussianPoint2::to_string() const {
    return "[" + c_[0].to_string() + " : " + c_[1].to_string() + " : " + c_[2].to_string() + "]";
}

Line2::Line2(BigInt l, BigInt m, BigInt n) : c_{std::move(l), std::move(m), std::move(n)} {
    canonicalize_triple(c_);
}

BigInt Line2::incidence(const ProjPoint2& p) const {
    return c_[0] * p.x() + c_[1] * p.y() + c_[2] * p.z();
}

std::string Line2::to_string() const {
    return "(" + c_[0].to_string() + "," + c_[1].to_string() + "," + c_[2].to_string() + ")";
}

// ---------------------------------------------------------------------------
// Mat3
// ---------------------------------------------------------------------------

Mat3 Mat3::identity() {
    Mat3 r;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) r.m[i][j] = BigRational(i == j ? 1 : 0);
    }
    return r;
}

BigRational Mat3::det() const {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Mat3 Mat3::adjugate() const {
    Mat3 r;
    auto minor = [&](int i, int j) {
        int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
        int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
        // rows/cols picked cyclically keep the cofactor sign built in
        return m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
    };
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) r.m[j][i] = minor(i, j);
    }
    return r;
}

ProjPoint2 Mat3::apply(const ProjPoint2& p) const {
    std::array<BigRational, 3> v;
    for (int i = 0; i < 3; ++i) {
        v[i] = m[i][0] * BigRational(p.x()) + m[i][1] * BigRational(p.y()) +
               m[i][2] * BigRational(p.z());
    }
    BigInt l = BigInt::lcm(BigInt::lcm(v[0].den(), v[1].den()), v[2].den());
    BigRational scale{l};
    return ProjPoint2((v[0] * scale).num(), (v[1] * scale).num(), (v[2] * scale).num());
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            BigRational s;
            for (int k = 0; k < 3; ++k) s += a.m[i][k] * b.m[k][j];
            r.m[i][j] = s;
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// Incidence operations
// ---------------------------------------------------------------------------

bool collinear(const ProjPoint2& p, const ProjPoint2& q, const ProjPoint2& r) {
    BigInt det = p.x() * (q.y() * r.z() - q.z() * r.y()) -
                 p.y() * (q.x() * r.z() - q.z() * r.x()) +
                 p.z() * (q.x() * r.y() - q.y() * r.x());
    return det.is_zero();
}

Line2 line_through(const ProjPoint2& p, const ProjPoint2& q) {
    if (p == q) throw std::invalid_argument("points must be distinct");
    return Line2(p.y() * q.z() - p.z() * q.y(), p.z() * q.x() - p.x() * q.z(),
                 p.x() * q.y() - p.y() * q.x());
}

Mat3 standardize(const ProjPoint2& p1, const ProjPoint2& p2, const Line2& l) {
    if (p1 == p2) throw std::invalid_argument("points must be distinct");
    if (!l.contains(p1) || !l.contains(p2)) {
        throw std::invalid_argument("line must contain both base points");
    }
    // third frame point: first standard basis vector off the line
    std::array<ProjPoint2, 3> basis = {ProjPoint2(BigInt(1), BigInt(0), BigInt(0)),
                                       ProjPoint2(BigInt(0), BigInt(1), BigInt(0)),
                                       ProjPoint2(BigInt(0), BigInt(0), BigInt(1))};
    const ProjPoint2* extra = nullptr;
    for (const auto& e : basis) {
        if (!l.contains(e)) {
            extra = &e;
            break;
        }
    }
    if (extra == nullptr) throw std::logic_error("no basis vector off the line");

    Mat3 cols;  // columns p1, p2, extra
    for (int i = 0; i < 3; ++i) {
        cols.m[i][0] = BigRational(p1[i]);
        cols.m[i][1] = BigRational(p2[i]);
        cols.m[i][2] = BigRational((*extra)[i]);
    }
    if (cols.det().is_zero()) throw std::logic_error("degenerate standardization frame");
    Mat3 a = cols.adjugate();

    const ProjPoint2 e1(BigInt(1), BigInt(0), BigInt(0));
    const ProjPoint2 e2(BigInt(0), BigInt(1), BigInt(0));
    if (a.apply(p1) != e1 || a.apply(p2) != e2 || a.det().is_zero()) {
        throw std::logic_error("standardization postcondition failed");
    }
    return a;
}

// ---------------------------------------------------------------------------
// P^2 <-> P^1 x P^1 transfer
// ---------------------------------------------------------------------------

TorusTransfer::TorusTransfer(const ProjPoint2& p1, const ProjPoint2& p2, const Line2& l)
    : to_std_(standardize(p1, p2, l)), from_std_(to_std_.adjugate()) {}

TorusPoint TorusTransfer::forward(const ProjPoint2& p) const {
    ProjPoint2 s = to_std_.apply(p);
    if (s.z().is_zero()) throw std::domain_error("indeterminate or contracted locus");
    return TorusPoint{ProjPoint1(s.y(), s.z()), ProjPoint1(s.x(), s.z())};
}

ProjPoint2 TorusTransfer::inverse(const TorusPoint& t) const {
    if (t.x.is_infinite() || t.y.is_infinite()) {
        throw std::domain_error("indeterminate or contracted locus");
    }
    const BigInt& a = t.x.a();
    const BigInt& b = t.x.b();
    const BigInt& c = t.y.a();
    const BigInt& d = t.y.b();
    ProjPoint2 s(c * b, a * d, b * d);
    return from_std_.apply(s);
}

TorusTransfer p2_to_torus(const ProjPoint2& p1, const ProjPoint2& p2, const Line2& l) {
    return TorusTransfer(p1, p2, l);
}

// ---------------------------------------------------------------------------
// Conics
// ---------------------------------------------------------------------------

Conic::Conic(std::array<std::array<GaussianRational, 3>, 3> m) : m_(std::move(m)) {
    // symmetric scan order: (0,0), (0,1), (0,2), (1,1), (1,2), (2,2)
    const std::array<std::pair<int, int>, 6> order = {
        {{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}}};
    const GaussianRational* pivot = nullptr;
    for (const auto& [i, j] : order) {
        if (!m_[i][j].is_zero()) {
            pivot = &m_[i][j];
            break;
        }
    }
    if (pivot == nullptr) throw std::invalid_argument("conic matrix must be nonzero");
    GaussianRational p = *pivot;
    for (auto& row : m_) {
        for (auto& e : row) e = e / p;
    }
}

GaussianRational Conic::evaluate(const GaussianPoint2& p) const {
    GaussianRational s;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) s = s + m_[i][j] * p[i] * p[j];
    }
    return s;
}

GaussianRational Conic::det() const {
    return m_[0][0] * (m_[1][1] * m_[2][2] - m_[1][2] * m_[2][1]) -
           m_[0][1] * (m_[1][0] * m_[2][2] - m_[1][2] * m_[2][0]) +
           m_[0][2] * (m_[1][0] * m_[2][1] - m_[1][1] * m_[2][0]);
}

Conic Conic::conj() const {
    std::array<std::array<GaussianRational, 3>, 3> c;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) c[i][j] = m_[i][j].conj();
    }
    return Conic(c);
}

namespace {

std::array<GaussianRational, 6> monomial_row(const GaussianPoint2& p) {
    return {p[0] * p[0], p[1] * p[1], p[2] * p[2], p[0] * p[1], p[0] * p[2], p[1] * p[2]};
}

/// In-place reduced row echelon form; returns (rank, pivot flags per column).
std::pair<std::size_t, std::array<bool, 6>> rref6(
    std::vector<std::array<GaussianRational, 6>>& rows) {
    std::array<bool, 6> pivot{};
    std::size_t r = 0;
    for (std::size_t c = 0; c < 6 && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        GaussianRational inv = GaussianRational(1) / rows[r][c];
        for (auto& e : rows[r]) e = e * inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            GaussianRational f = rows[i][c];
            for (std::size_t j = 0; j < 6; ++j) rows[i][j] = rows[i][j] - f * rows[r][j];
        }
        pivot[c] = true;
        ++r;
    }
    return {r, pivot};
}

Conic conic_from_vector(const std::array<GaussianRational, 6>& v) {
    const BigRational half(1, 2);
    auto h = [&](const GaussianRational& g) {
        return GaussianRational(g.re * half, g.im * half);
    };
    std::array<std::array<GaussianRational, 3>, 3> m;
    m[0][0] = v[0];
    m[1][1] = v[1];
    m[2][2] = v[2];
    m[0][1] = m[1][0] = h(v[3]);
    m[0][2] = m[2][0] = h(v[4]);
    m[1][2] = m[2][1] = h(v[5]);
    return Conic(m);
}

}  // namespace

Conic conic_through_five(const std::array<GaussianPoint2, 5>& pts) {
    std::vector<std::array<GaussianRational, 6>> rows;
    rows.reserve(5);
    for (const auto& p : pts) rows.push_back(monomial_row(p));
    auto [rank, pivot] = rref6(rows);
    if (rank < 5) throw std::domain_error("degenerate configuration: conic not unique");

    std::size_t free_col = 6;
    for (std::size_t c = 0; c < 6; ++c) {
        if (!pivot[c]) {
            free_col = c;
            break;
        }
    }
    std::array<GaussianRational, 6> v;
    v[free_col] = GaussianRational(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < 6; ++c) {
        if (!pivot[c]) continue;
        v[c] = -rows[r][free_col];
        ++r;
    }

    Conic conic = conic_from_vector(v);
    for (const auto& p : pts) {
        if (!conic.evaluate(p).is_zero()) throw std::logic_error("conic misses an input point");
    }
    return conic;
}

ConfigReport validate_six_config(const std::array<GaussianPoint2, 6>& pts) {
    for (std::size_t i = 0; i < 6; ++i) {
        for (std::size_t j = i + 1; j < 6; ++j) {
            if (pts[i] == pts[j]) throw std::invalid_argument("points not distinct");
        }
    }

    ConfigReport report;

    report.conjugation_closed = true;
    for (const auto& p : pts) {
        GaussianPoint2 pc = p.conj();
        bool found = false;
        for (const auto& q : pts) {
            if (q == pc) {
                found = true;
                break;
            }
        }
        if (!found) {
            report.conjugation_closed = false;
            break;
        }
    }

    {
        std::vector<std::array<GaussianRational, 6>> rows;
        rows.reserve(6);
        for (const auto& p : pts) rows.push_back(monomial_row(p));
        report.no_common_conic = rref6(rows).first == 6;
    }

    report.five_point_conics_nonsingular = true;
    for (std::size_t omit = 0; omit < 6; ++omit) {
        std::array<std::size_t, 5> idx{};
        std::size_t k = 0;
        for (std::size_t i = 0; i < 6; ++i) {
            if (i == omit) continue;
            idx[k++] = i;
        }
        std::array<GaussianPoint2, 5> subset{pts[idx[0]], pts[idx[1]], pts[idx[2]], pts[idx[3]],
                                             pts[idx[4]]};
        bool ok = false;
        try {
            Conic c = conic_through_five(subset);
            ok = !c.is_singular();
        } catch (const std::domain_error&) {
            ok = false;
        }
        report.subset_ok[omit] = ok;
        if (!ok) report.five_point_conics_nonsingular = false;
    }

    return report;
}

}  // namespace ratsurf
