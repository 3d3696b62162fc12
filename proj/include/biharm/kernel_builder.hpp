#pragma once

#include "biharm/boundary.hpp"
#include "biharm/expansion.hpp"
#include "biharm/linear_system.hpp"

#include <span>
#include <string>
#include <vector>

namespace biharm {

enum class KernelKind { F, H };

const char* to_string(KernelKind kind) noexcept;
KernelKind kernel_kind_from_string(const std::string& s);

struct KernelSpec {
    int gamma = 0;
    KernelKind kind = KernelKind::F;
};

/// A biharmonic expansion with its boundary data, before normalization.
struct RawSolution {
    KernelExpansion expansion;
    BoundaryData boundary;
};

/// Exponent window for the unknown coefficients of f_beta, 1 <= beta < beta0.
enum class AnsatzGrid {
    tight, ///< [max(2b-1, g+2), b+g+1] for F, [max(2b, g+2), b+g+1] for H
    wide,  ///< [b, b+g+1]
};

struct Monomial {
    int beta;
    int k;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// The fixed leading term plus the linear system for the unknowns.
/// Row (level, m) states that the coefficient of t^m / |1-z|^(2 level) in the
/// biharmonic image vanishes.
struct Ansatz {
    KernelSpec spec;
    Monomial leading;
    std::vector<Monomial> unknowns; ///< ascending in (beta, k)
    RationalLinearSystem system{0};
};

/// beta0 = gamma + 2 with t^(2 gamma + 3) for F; beta0 = gamma + 1 with
/// t^(2 gamma + 2) for H.
Monomial leading_term(const KernelSpec& spec);

Ansatz make_ansatz(const KernelSpec& spec, AnsatzGrid grid = AnsatzGrid::tight);

/// Leading term plus sum values[i] * unknowns[i].
KernelExpansion assemble(const Ansatz& ansatz, std::span<const Rational> values);

/// Solves the tight ansatz (falling back to the wide one if infeasible) and
/// attaches boundary data. Free variables are set to zero.
/// Throws Error(ansatz_insufficient) or Error(non_delta_boundary).
RawSolution build_raw(const KernelSpec& spec);

/// Scales by 1/b. Requires a == 0 and b != 0.
KernelExpansion normalize_H(const RawSolution& raw);

/// (raw - b h) / a, where h has boundary data (0, 1). Requires a != 0.
KernelExpansion normalize_F(const RawSolution& raw, const KernelExpansion& h);

/// F_gamma or H_gamma. The result is checked to be biharmonic with boundary
/// data (1, 0) for F and (0, 1) for H.
KernelExpansion build(const KernelSpec& spec);

} // namespace biharm
