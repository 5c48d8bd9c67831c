#include "ratsurf/interpolate.hpp"

#include <set>
#include <stdexcept>

namespace ratsurf {

namespace {

void check_inputs(const std::vector<BigRational>& nodes, const std::vector<BigRational>& values) {
    if (nodes.empty()) throw std::invalid_argument("at least one node required");
    if (nodes.size() != values.size()) {
        throw std::invalid_argument("nodes and values must have equal length");
    }
    std::set<BigRational> seen(nodes.begin(), nodes.end());
    if (seen.size() != nodes.size()) throw std::invalid_argument("nodes not distinct");
    for (const auto& v : values) {
        if (v.sign() <= 0) throw std::invalid_argument("values must be positive");
    }
}

}  // namespace

PositiveInterpolant positive_interpolate(const std::vector<BigRational>& nodes,
                                         const std::vector<BigRational>& values) {
    check_inputs(nodes, values);
    const std::size_t m = nodes.size();

    // base(z) = sum_j  y_j * prod_{k != j} (z - x_k)^2 / (x_j - x_k)^2
    Poly base;
    for (std::size_t j = 0; j < m; ++j) {
        Poly term = Poly::constant(BigRational(1));
        BigRational denom(1);
        for (std::size_t k = 0; k < m; ++k) {
            if (k == j) continue;
            Poly lin = Poly::linear_root(nodes[k]);
            term = term * lin * lin;
            BigRational d = nodes[j] - nodes[k];
            denom *= d * d;
        }
        base += (values[j] / denom) * term;
    }

    // pad with (prod_k (z - x_k))^2: vanishes at each node, nonnegative on R,
    // and forces degree exactly 2m with leading coefficient 1
    Poly w = Poly::constant(BigRational(1));
    for (const auto& x : nodes) w = w * Poly::linear_root(x);
    Poly p = base + w * w;

    PositiveInterpolant out{p, nodes, values, 0};
    for (std::size_t i = 0; i < m; ++i) {
        if (p.eval(nodes[i]) != values[i]) {
            throw std::logic_error("interpolant misses a node value");
        }
    }
    if (p.degree() != static_cast<int>(2 * m)) throw std::logic_error("interpolant degree mismatch");
    if (p.leading() != BigRational(1)) throw std::logic_error("interpolant leading coefficient not 1");
    out.certified_root_count = count_real_roots(p);
    if (out.certified_root_count != 0) throw std::logic_error("interpolant has real zeros");
    return out;
}

PositiveRatio positive_ratio_interpolate(const std::vector<BigRational>& nodes,
                                         const std::vector<BigRational>& num_values,
                                         const std::vector<BigRational>& den_values) {
    PositiveInterpolant pi = positive_interpolate(nodes, num_values);
    PositiveInterpolant qi = positive_interpolate(nodes, den_values);
    return PositiveRatio{pi.poly, qi.poly, nodes, num_values, den_values};
}

}  // namespace ratsurf
