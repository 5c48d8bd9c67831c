#pragma once

#include <vector>

#include "ratsurf/poly.hpp"

namespace ratsurf {

/// Everywhere-positive polynomial interpolant through (x_i, y_i) with all
/// y_i > 0. Built as a sum of squared Lagrange factors plus a squared node
/// product, so the degree is exactly 2m, the leading coefficient is 1, and a
/// Sturm count certifies the absence of real zeros.
struct PositiveInterpolant {
    Poly poly;
    std::vector<BigRational> nodes;
    std::vector<BigRational> values;
    /// Sturm real-root count over (-inf, inf); always 0 for a valid instance.
    long certified_root_count = 0;
};

/// Zero-free rational interpolant: p and q of equal degree 2m, both without
/// real zeros, with p(x_i)/q(x_i) = y_i/z_i exactly.
struct PositiveRatio {
    Poly p;
    Poly q;
    std::vector<BigRational> nodes;
    std::vector<BigRational> num_values;
    std::vector<BigRational> den_values;
};

/// Strictly positive interpolation. Nodes pairwise distinct, values strictly
/// positive, equal nonzero lengths; throws std::invalid_argument otherwise.
PositiveInterpolant positive_interpolate(const std::vector<BigRational>& nodes,
                                         const std::vector<BigRational>& values);

/// Equal-degree zero-free ratio interpolation: p/q hits y_i/z_i at every node.
PositiveRatio positive_ratio_interpolate(const std::vector<BigRational>& nodes,
                                         const std::vector<BigRational>& num_values,
                                         const std::vector<BigRational>& den_values);

}  // namespace ratsurf
