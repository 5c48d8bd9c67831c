#include "ratsurf/poly.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace ratsurf {

// ---------------------------------------------------------------------------
// Poly
// ---------------------------------------------------------------------------

void Poly::strip() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::linear_root(const BigRational& r) {
    return Poly(std::vector<BigRational>{-r, BigRational(1)});
}

const BigRational& Poly::leading() const {
    if (c_.empty()) throw std::logic_error("zero polynomial has no leading coefficient");
    return c_.back();
}

BigRational Poly::coeff(std::size_t i) const {
    if (i >= c_.size()) return BigRational();
    return c_[i];
}

BigRational Poly::eval(const BigRational& x) const {
    BigRational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<BigRational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) {
        d[i - 1] = BigRational(static_cast<long>(i)) * c_[i];
    }
    return Poly(std::move(d));
}

Poly Poly::monic() const {
    if (is_zero()) return Poly();
    BigRational inv = leading().reciprocal();
    std::vector<BigRational> m(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) m[i] = c_[i] * inv;
    return Poly(std::move(m));
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size());
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
    strip();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size());
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
    strip();
    return *this;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r = a;
    r += b;
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly r = a;
    r -= b;
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<BigRational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            c[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return Poly(std::move(c));
}

Poly operator*(const BigRational& s, const Poly& p) {
    std::vector<BigRational> c(p.c_.size());
    for (std::size_t i = 0; i < p.c_.size(); ++i) c[i] = s * p.c_[i];
    return Poly(std::move(c));
}

Poly operator-(const Poly& a) { return BigRational(-1) * a; }

std::string Poly::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i > 0) out += ", ";
        out += c_[i].to_string();
    }
    out += "]";
    return out;
}

Poly Poly::parse(const std::string& text) {
    const auto bad = [&]() {
        return std::invalid_argument("invalid polynomial literal: '" + text + "'");
    };
    auto l = text.find('[');
    auto r = text.rfind(']');
    if (l == std::string::npos || r == std::string::npos || r < l) throw bad();
    std::string body = text.substr(l + 1, r - l - 1);
    bool blank = true;
    for (char c : body) {
        if (c != ' ' && c != '\t') blank = false;
    }
    if (blank) return Poly();
    std::vector<BigRational> cs;
    std::size_t pos = 0;
    while (pos <= body.size()) {
        auto comma = body.find(',', pos);
        std::string entry =
            comma == std::string::npos ? body.substr(pos) : body.substr(pos, comma - pos);
        cs.push_back(BigRational::parse(entry));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return Poly(std::move(cs));
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    std::vector<BigRational> rem(a.coeffs());
    int db = b.degree();
    int dq = static_cast<int>(rem.size()) - 1 - db;
    if (dq < 0) return {Poly(), a};
    std::vector<BigRational> quo(dq + 1);
    BigRational lb_inv = b.leading().reciprocal();
    for (int top = static_cast<int>(rem.size()) - 1; top >= db;) {
        if (rem[top].is_zero()) {
            --top;
            continue;
        }
        int shift = top - db;
        BigRational f = rem[top] * lb_inv;
        quo[shift] = f;
        for (int j = 0; j <= db; ++j) {
            rem[j + shift] -= f * b.coeff(j);
        }
        --top;
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

// ---------------------------------------------------------------------------
// Integer kernel for remainder sequences. Coefficients lowest-first, stripped.
// ---------------------------------------------------------------------------

namespace {

using ZPoly = std::vector<BigInt>;

void zstrip(ZPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int zdeg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

ZPoly zderivative(const ZPoly& p) {
    if (p.size() <= 1) return {};
    ZPoly d(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = BigInt(static_cast<long>(i)) * p[i];
    zstrip(d);
    return d;
}

BigInt zcontent(const ZPoly& p) {
    BigInt g(0);
    for (const auto& c : p) g = BigInt::gcd(g, c);
    return g;
}

void zdiv_scalar(ZPoly& p, const BigInt& s) {
    for (auto& c : p) c = BigInt::div_exact(c, s);
}

void znegate(ZPoly& p) {
    for (auto& c : p) c = -c;
}

void zmake_primitive(ZPoly& p) {
    zstrip(p);
    if (p.empty()) return;
    BigInt c = zcontent(p);
    if (c != BigInt(1)) zdiv_scalar(p, c);
}

/// Pseudo-remainder prem(a, b) = lc(b)^(deg a - deg b + 1) * a  mod  b,
/// computed entirely in integers. Requires deg a >= deg b >= 0.
ZPoly zprem(ZPoly a, const ZPoly& b) {
    const int db = zdeg(b);
    const BigInt lb = b.back();
    long e = zdeg(a) - db + 1;
    while (zdeg(a) >= db) {
        const BigInt la = a.back();
        const int shift = zdeg(a) - db;
        ZPoly r(a.size() - 1);
        for (int i = 0; i < static_cast<int>(a.size()) - 1; ++i) {
            BigInt t = lb * a[i];
            int j = i - shift;
            if (j >= 0 && j < db) t -= la * b[j];
            r[i] = std::move(t);
        }
        zstrip(r);
        a = std::move(r);
        --e;
    }
    if (e > 0 && !a.empty()) {
        BigInt f = BigInt::pow(lb, static_cast<unsigned long>(e));
        for (auto& c : a) c *= f;
    }
    return a;
}

/// Exact quotient a / b in Z[x]; throws if the division is not exact.
ZPoly zexact_div(ZPoly a, const ZPoly& b) {
    zstrip(a);
    if (a.empty()) return {};
    const int db = zdeg(b);
    const int dq = zdeg(a) - db;
    if (dq < 0) throw std::logic_error("inexact polynomial division");
    ZPoly q(dq + 1, BigInt(0));
    while (!a.empty() && zdeg(a) >= db) {
        const int shift = zdeg(a) - db;
        BigInt f = BigInt::div_exact(a.back(), b.back());
        for (int j = 0; j <= db; ++j) {
            a[j + shift] -= f * b[j];
        }
        q[shift] = std::move(f);
        zstrip(a);
    }
    if (!a.empty()) throw std::logic_error("inexact polynomial division");
    return q;
}

/// Clears denominators and strips content; a positive scalar multiple of p.
ZPoly zfrom_poly(const Poly& p) {
    BigInt l(1);
    for (const auto& c : p.coeffs()) l = BigInt::lcm(l, c.den());
    ZPoly out;
    out.reserve(p.coeffs().size());
    BigRational scale{l};
    for (const auto& c : p.coeffs()) {
        BigRational v = c * scale;
        out.push_back(v.num());
    }
    zmake_primitive(out);
    return out;
}

/// Sturm-equivalent chain: every element is a positive scalar multiple of the
/// corresponding element of the exact negated-remainder chain of the seed.
std::vector<ZPoly> signed_chain(ZPoly seed) {
    std::vector<ZPoly> chain;
    chain.push_back(std::move(seed));
    if (zdeg(chain[0]) < 1) return chain;
    ZPoly d = zderivative(chain[0]);
    zmake_primitive(d);
    chain.push_back(std::move(d));
    while (true) {
        const ZPoly& b = chain.back();
        if (zdeg(b) <= 0) break;
        const ZPoly& a = chain[chain.size() - 2];
        const int delta = zdeg(a) - zdeg(b);
        ZPoly r = zprem(a, b);
        if (r.empty()) break;  // b divides a: nonconstant gcd
        // r = lc(b)^(delta+1) * rem(a,b); flip so the stored element is a
        // positive multiple of -rem(a,b), then strip content.
        const bool lead_power_positive = (b.back().sign() > 0) || ((delta + 1) % 2 == 0);
        zmake_primitive(r);
        if (lead_power_positive) znegate(r);
        chain.push_back(std::move(r));
    }
    return chain;
}

/// Chain over the square-free part of p (p nonzero).
std::vector<ZPoly> count_chain(const Poly& p) {
    ZPoly zp = zfrom_poly(p);
    std::vector<ZPoly> chain = signed_chain(zp);
    if (zdeg(chain.back()) >= 1) {
        ZPoly g = chain.back();
        zmake_primitive(g);
        ZPoly sf = zexact_div(chain.front(), g);
        zmake_primitive(sf);
        chain = signed_chain(std::move(sf));
    }
    return chain;
}

int zsign_at(const ZPoly& p, const BigInt& num, const BigInt& den) {
    if (p.empty()) return 0;
    const int d = zdeg(p);
    BigInt acc = p[d];
    BigInt dpow(1);
    for (int i = d - 1; i >= 0; --i) {
        dpow *= den;
        acc = acc * num + p[i] * dpow;
    }
    return acc.sign();
}

int zsign_at_bound(const ZPoly& p, const Bound& at) {
    if (p.empty()) return 0;
    switch (at.kind()) {
        case Bound::Kind::PosInfinity:
            return p.back().sign();
        case Bound::Kind::NegInfinity:
            return zdeg(p) % 2 == 0 ? p.back().sign() : -p.back().sign();
        case Bound::Kind::Finite:
            return zsign_at(p, at.value().num(), at.value().den());
    }
    return 0;
}

long count_variations(const std::vector<int>& signs) {
    long v = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

long zvariations_at(const std::vector<ZPoly>& chain, const Bound& at) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& p : chain) signs.push_back(zsign_at_bound(p, at));
    return count_variations(signs);
}

}  // namespace

// ---------------------------------------------------------------------------
// gcd, Sturm chain, root counting
// ---------------------------------------------------------------------------

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd undefined");
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    ZPoly lhs = zfrom_poly(a);
    ZPoly rhs = zfrom_poly(b);
    if (zdeg(lhs) < zdeg(rhs)) std::swap(lhs, rhs);
    while (!rhs.empty()) {
        ZPoly r = zprem(lhs, rhs);
        zmake_primitive(r);
        lhs = std::move(rhs);
        rhs = std::move(r);
    }
    std::vector<BigRational> cs;
    cs.reserve(lhs.size());
    for (const auto& z : lhs) cs.emplace_back(z);
    return Poly(std::move(cs)).monic();
}

bool operator<(const Bound& a, const Bound& b) {
    auto order = [](Bound::Kind k) {
        return k == Bound::Kind::NegInfinity ? 0 : (k == Bound::Kind::Finite ? 1 : 2);
    };
    if (order(a.kind()) != order(b.kind())) return order(a.kind()) < order(b.kind());
    if (a.kind() != Bound::Kind::Finite) return false;
    return a.value() < b.value();
}

SturmChain::SturmChain(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("identically zero");
    Poly seed = p;
    if (p.degree() >= 1) {
        Poly g = poly_gcd(p, p.derivative());
        if (g.degree() >= 1) seed = poly_divmod(p, g).first;
    }
    chain_.push_back(seed);
    if (seed.degree() >= 1) {
        chain_.push_back(seed.derivative());
        while (chain_.back().degree() >= 1) {
            const Poly& a = chain_[chain_.size() - 2];
            const Poly& b = chain_.back();
            Poly r = poly_divmod(a, b).second;
            if (r.is_zero()) break;
            chain_.push_back(-r);
        }
    }
}

long SturmChain::variations(const Bound& at) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& p : chain_) {
        if (p.is_zero()) {
            signs.push_back(0);
            continue;
        }
        switch (at.kind()) {
            case Bound::Kind::PosInfinity:
                signs.push_back(p.leading().sign());
                break;
            case Bound::Kind::NegInfinity:
                signs.push_back(p.degree() % 2 == 0 ? p.leading().sign() : -p.leading().sign());
                break;
            case Bound::Kind::Finite:
                signs.push_back(p.eval(at.value()).sign());
                break;
        }
    }
    long v = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

long SturmChain::count(const Bound& lo, const Bound& hi) const {
    if (!(lo < hi)) throw std::invalid_argument("interval bounds must satisfy lo < hi");
    long c = variations(lo) - variations(hi);
    if (c < 0) throw std::logic_error("sign variation underflow");
    return c;
}

long count_real_roots(const Poly& p, const Bound& lo, const Bound& hi) {
    if (p.is_zero()) throw std::domain_error("identically zero");
    if (!(lo < hi)) throw std::invalid_argument("interval bounds must satisfy lo < hi");
    const auto chain = count_chain(p);
    long c = zvariations_at(chain, lo) - zvariations_at(chain, hi);
    if (c < 0) throw std::logic_error("sign variation underflow");
    return c;
}

long count_real_roots(const Poly& p) {
    return count_real_roots(p, Bound::neg_infinity(), Bound::pos_infinity());
}

}  // namespace ratsurf
