#pragma once

#include "biharm/laurent_poly.hpp"

#include <map>

namespace biharm {

/// Sequence {f_beta} indexed by beta >= 1; entries may carry negative
/// exponents once the reciprocal weight has been applied.
using CoeffSequence = std::map<int, LaurentPoly>;

/// Adds p to seq[beta], erasing the slot if the sum vanishes.
void accumulate(CoeffSequence& seq, int beta, const LaurentPoly& p);

bool is_zero(const CoeffSequence& seq);

/// u(z) = sum_beta f_beta(|z|^2) / |1 - z|^(2 beta) for the weight
/// (1 - |z|^2)^gamma. Every stored f_beta is nonzero.
struct KernelExpansion {
    int gamma = 0;
    CoeffSequence terms;

    /// Coefficient of t^k / |1 - z|^(2 beta).
    Rational coeff(int beta, int k) const;
    void add_term(int beta, int k, const Rational& c);

    KernelExpansion& operator+=(const KernelExpansion& other);
    KernelExpansion& operator-=(const KernelExpansion& other);
    KernelExpansion& operator*=(const Rational& c);

    friend KernelExpansion operator+(KernelExpansion a, const KernelExpansion& b) { return a += b; }
    friend KernelExpansion operator-(KernelExpansion a, const KernelExpansion& b) { return a -= b; }
    friend KernelExpansion operator*(KernelExpansion a, const Rational& c) { return a *= c; }
    friend KernelExpansion operator*(const Rational& c, KernelExpansion a) { return a *= c; }
    friend bool operator==(const KernelExpansion& a, const KernelExpansion& b) = default;

    std::size_t monomial_count() const;
};

} // namespace biharm
