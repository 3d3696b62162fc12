#include "biharm/boundary.hpp"

#include "biharm/error.hpp"

#include <cmath>
#include <optional>
#include <string>

namespace biharm {

namespace {

void require_beta_ge_2(int beta) {
    if (beta < 2) {
        throw Error(ErrorCode::invalid_argument,
                    "the binomial sums need beta >= 2 (got " + std::to_string(beta) + ")");
    }
}

// Coefficient of s^k in (1 - s)^(2b-1) * sum_j C(j+b-1, j)^2 s^j.
Integer means_coefficient(int beta, int k) {
    Integer sum = 0;
    for (int j = 0; j <= k && j <= 2 * beta - 1; ++j) {
        const Integer c = binomial(k - j + beta - 1, k - j);
        const Integer term = binomial(2 * beta - 1, j) * c * c;
        if (j % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum;
}

BoundaryData boundary_with(int k, int beta, const std::optional<BoundaryData>& block) {
    if (k < 2 * beta - 1) {
        throw Error(ErrorCode::non_delta_boundary,
                    "t^" + std::to_string(k) + "/|1-z|^" + std::to_string(2 * beta) +
                        " has no delta_1-type boundary value (beta=" + std::to_string(beta) +
                        ", k=" + std::to_string(k) + ")");
    }
    const BoundaryData unit = beta == 1 ? BoundaryData{1, 0} : *block;
    if (k == 2 * beta - 1) {
        return unit;
    }
    if (k == 2 * beta) {
        return {0, 2 * unit.a};
    }
    return {0, 0};
}

} // namespace

BoundaryData ab_sums(int beta) {
    require_beta_ge_2(beta);
    Integer a = 0, b = 0;
    for (int k = 0; k <= 2 * beta - 2; ++k) {
        const Integer s = means_coefficient(beta, k);
        a += s;
        b -= 2 * k * s;
    }
    return {Rational(a), Rational(b)};
}

LaurentPoly integral_means_poly(int beta) {
    require_beta_ge_2(beta);
    LaurentPoly p;
    for (int k = 0; k <= 2 * beta - 2; ++k) {
        p.add_term(k, Rational(means_coefficient(beta, k)));
    }
    return p;
}

BoundaryData monomial_boundary(int k, int beta) {
    if (beta < 1) {
        throw Error(ErrorCode::invalid_argument, "beta must be >= 1");
    }
    std::optional<BoundaryData> block;
    if (beta >= 2 && k >= 2 * beta - 1 && k <= 2 * beta) {
        block = ab_sums(beta);
    }
    return boundary_with(k, beta, block);
}

BoundaryData expansion_boundary(const KernelExpansion& u) {
    BoundaryData total{0, 0};
    for (const auto& [beta, f] : u.terms) {
        std::optional<BoundaryData> block;
        if (beta >= 2 && f.min_exponent() <= 2 * beta) {
            block = ab_sums(beta);
        }
        for (const auto& [k, c] : f.terms()) {
            const BoundaryData d = boundary_with(k, beta, block);
            total.a += c * d.a;
            total.b += c * d.b;
        }
    }
    return total;
}

long double exact_integral_mean(const KernelExpansion& u, long double r) {
    const long double s = r * r;
    long double total = 0.0L;
    for (const auto& [beta, f] : u.terms) {
        const long double p = beta == 1 ? 1.0L : evaluate(integral_means_poly(beta), s);
        for (const auto& [k, c] : f.terms()) {
            if (k < 2 * beta - 1) {
                throw Error(ErrorCode::non_delta_boundary, "term below the delta_1 range");
            }
            total += to_long_double(c) * std::pow(1.0L - s, static_cast<long double>(k - 2 * beta + 1)) * p;
        }
    }
    return total;
}

} // namespace biharm
