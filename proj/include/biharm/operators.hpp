#pragma once

#include "biharm/expansion.hpp"

namespace biharm {

// Radial ODE operators obtained by pushing the Laplacian d^2/dz dz-bar
// through a building block f(|z|^2) / |1 - z|^(2 beta):
//
//   Delta [f / |1-z|^(2b)] = (P_b f) / |1-z|^(2b) + (Q_b f) / |1-z|^(2b+2)
//
// with P_b = (1 - b) d/dx + x d^2/dx^2 and Q_b = b (b + (1 - x) d/dx).

LaurentPoly apply_P(int beta, const LaurentPoly& f);
LaurentPoly apply_Q(int beta, const LaurentPoly& f);

/// Multiplication by the reciprocal weight (1 - x)^(-gamma).
LaurentPoly apply_winv(int gamma, const LaurentPoly& f);

/// Closed-form images of a single monomial t^k.
enum class MonomialRule {
    QQ,    ///< Q_{b+1} w^-1 Q_b
    Mixed, ///< P_{b+1} w^-1 Q_b + Q_b w^-1 P_b
    PP,    ///< P_b w^-1 P_b
};

/// Evaluates the closed form for (gamma, beta, k). Rules are indexed by the
/// lower beta; callers shift to reach level beta + 1 (Mixed) or beta + 2 (QQ).
LaurentPoly monomial_rule(int gamma, int beta, int k, MonomialRule rule);

/// Same quantity computed by composing apply_P / apply_Q / apply_winv.
LaurentPoly monomial_rule_generic(int gamma, int beta, int k, MonomialRule rule);

/// g_b = P_b f_b + Q_{b-1} f_{b-1}.
CoeffSequence laplacian(const CoeffSequence& f);

/// (P + Q) w^-1 (P + Q) applied to u.terms via the generic operators.
/// u is w_gamma-biharmonic iff the result is empty.
CoeffSequence biharmonic(const KernelExpansion& u);

/// Same image assembled from the monomial closed forms.
CoeffSequence biharmonic_fast(const KernelExpansion& u);

} // namespace biharm
