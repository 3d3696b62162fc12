#pragma once

#include "biharm/expansion.hpp"

namespace biharm {

/// Coefficients of delta_1 in the distributional boundary value (a) and the
/// inward normal derivative (b): the integral means behave like
/// a + b (1 - r) + O((1 - r)^2).
struct BoundaryData {
    Rational a;
    Rational b;

    friend bool operator==(const BoundaryData&, const BoundaryData&) = default;
};

/// (a_beta, b_beta) for t^(2 beta - 1) / |1 - z|^(2 beta), evaluated from
/// the binomial double sums. Requires beta >= 2.
BoundaryData ab_sums(int beta);

/// p(s) with p(r^2) equal to the integral mean of t^(2 beta - 1) / |1-z|^(2 beta)
/// for every 0 <= r < 1; stored as a polynomial in s = r^2 of degree
/// at most 2 beta - 2. Requires beta >= 2.
LaurentPoly integral_means_poly(int beta);

/// Boundary data of t^k / |1 - z|^(2 beta) for k >= 2 beta - 1.
///
/// The k = 2 beta - 1 case is ab_sums. For larger k the integral mean is
/// (1 - r^2)^(k - 2 beta + 1) p(r^2), so k = 2 beta gives (0, 2 a_beta) and
/// k >= 2 beta + 1 gives (0, 0). a_1 = 1 (Poisson kernel).
/// Throws Error(non_delta_boundary) when k < 2 beta - 1.
BoundaryData monomial_boundary(int k, int beta);

/// Linear sum of monomial_boundary over every term of u.
BoundaryData expansion_boundary(const KernelExpansion& u);

/// Exact integral mean of u at radius r, from the polynomial formula
/// (terms with k < 2 beta - 1 are rejected as above).
long double exact_integral_mean(const KernelExpansion& u, long double r);

} // namespace biharm
