#include "biharm/operators.hpp"

#include "biharm/error.hpp"

namespace biharm {

LaurentPoly apply_P(int beta, const LaurentPoly& f) {
    const LaurentPoly d1 = d_dx(f);
    return Rational(1 - beta) * d1 + mul_x(d_dx(d1));
}

LaurentPoly apply_Q(int beta, const LaurentPoly& f) {
    // (1 - x) f' = t f'
    return Rational(beta) * (Rational(beta) * f + d_dx(f).shifted(1));
}

LaurentPoly apply_winv(int gamma, const LaurentPoly& f) {
    return f.shifted(-gamma);
}

LaurentPoly monomial_rule(int gamma, int beta, int k, MonomialRule rule) {
    if (k < 0) {
        throw Error(ErrorCode::invalid_argument, "monomial rule needs k >= 0");
    }
    // Products can exceed 64 bits for large gamma, so stay in Integer.
    const Integer b = beta, g = gamma, K = k;
    LaurentPoly out;
    switch (rule) {
    case MonomialRule::QQ:
        out.add_term(k - gamma, Rational(b * (b + 1) * (b - K) * (b + g + 1 - K)));
        break;
    case MonomialRule::Mixed:
        out.add_term(k - gamma - 1, Rational(b * (b + g + 1 - K) * (b - K) * (2 * K - g)));
        out.add_term(k - gamma - 2,
                     Rational(b * (K * (K - 1) * (b + g + 2 - K) + (b - K) * (K - g) * (K - g - 1))));
        break;
    case MonomialRule::PP:
        out.add_term(k - gamma - 2, Rational(K * (b - K) * (K - g - 1) * (b + g + 1 - K)));
        out.add_term(k - gamma - 3,
                     Rational(K * (K - g - 2) *
                              ((b - K) * (K - g - 1) + (b - 1) * (K - 1) - (K - 1) * (K - g - 3))));
        out.add_term(k - gamma - 4, Rational(K * (K - 1) * (K - g - 2) * (K - g - 3)));
        break;
    }
    return out;
}

LaurentPoly monomial_rule_generic(int gamma, int beta, int k, MonomialRule rule) {
    const LaurentPoly f = LaurentPoly::monomial(k);
    switch (rule) {
    case MonomialRule::QQ:
        return apply_Q(beta + 1, apply_winv(gamma, apply_Q(beta, f)));
    case MonomialRule::Mixed:
        return apply_P(beta + 1, apply_winv(gamma, apply_Q(beta, f))) +
               apply_Q(beta, apply_winv(gamma, apply_P(beta, f)));
    case MonomialRule::PP:
        return apply_P(beta, apply_winv(gamma, apply_P(beta, f)));
    }
    return {};
}

CoeffSequence laplacian(const CoeffSequence& f) {
    CoeffSequence g;
    for (const auto& [beta, fb] : f) {
        accumulate(g, beta, apply_P(beta, fb));
        accumulate(g, beta + 1, apply_Q(beta, fb));
    }
    return g;
}

CoeffSequence biharmonic(const KernelExpansion& u) {
    CoeffSequence weighted;
    for (const auto& [beta, g] : laplacian(u.terms)) {
        weighted.emplace(beta, apply_winv(u.gamma, g));
    }
    return laplacian(weighted);
}

CoeffSequence biharmonic_fast(const KernelExpansion& u) {
    CoeffSequence out;
    for (const auto& [beta, fb] : u.terms) {
        for (const auto& [k, c] : fb.terms()) {
            accumulate(out, beta, c * monomial_rule(u.gamma, beta, k, MonomialRule::PP));
            accumulate(out, beta + 1, c * monomial_rule(u.gamma, beta, k, MonomialRule::Mixed));
            accumulate(out, beta + 2, c * monomial_rule(u.gamma, beta, k, MonomialRule::QQ));
        }
    }
    return out;
}

} // namespace biharm
