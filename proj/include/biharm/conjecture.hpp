#pragma once

#include "biharm/kernel_builder.hpp"

#include <optional>
#include <string>
#include <vector>

namespace biharm {

/// Normalization constants of the binomial closed forms.
///
/// F: c_0 = 1 and sum_{k<=j} c_k C(g+1-2k, j-k) = 0 for 1 <= j <= floor((g+1)/2).
/// H: c_0 = 1 and sum_{k<=j} c_k C(g-2k,   j-k) = 1 for 1 <= j <= floor(g/2).
struct ConjectureCoefficients {
    int gamma = 0;
    KernelKind kind = KernelKind::F;
    std::vector<Rational> c;
};

ConjectureCoefficients solve_ck(int gamma, KernelKind kind);

/// Row length of the binomial table used by the closed form:
/// g + 1 - 2k for F, g - 2k for H.
int binomial_row(int gamma, KernelKind kind, int k);

/// Closed-form kernel assembled term by term:
///   2 f_b       = sum_k c_k C(g+1-2k, b-1-k) t^(b+g+1-k),  1 <= b <= g+2
///   2 b h_b     = sum_k c_k C(g-2k,   b-1-k) t^(b+g+1-k),  1 <= b <= g+1
KernelExpansion conjectured_kernel(int gamma, KernelKind kind);

struct PascalReport {
    bool ok = true;
    /// Scale of each column as read off the first row (beta = k + 1).
    std::vector<Rational> column_scales;
    /// First (beta, k-offset) that breaks the binomial-row pattern.
    std::optional<Monomial> first_violation;
    std::string message;
};

/// Checks that, for each offset k, the coefficient of t^(b+g+1-k) in the
/// normalized f_b (2 f_b for F, 2 b h_b for H) equals s_k C(row_k, b-1-k) for
/// a single scale s_k, and that no other monomials are present.
PascalReport pascal_columns(const KernelExpansion& u, KernelKind kind);

struct KindVerdict {
    KernelKind kind = KernelKind::F;
    bool biharmonic = false;
    bool boundary = false;
    bool matches_builder = false;
    /// Only filled in deep mode: every monomial rule used matched the generic path.
    std::optional<bool> rules = std::nullopt;
    std::string detail;

    bool passed() const { return biharmonic && boundary && matches_builder && rules.value_or(true); }
};

struct ConjectureVerdict {
    int gamma = 0;
    KindVerdict f;
    KindVerdict h;

    bool passed() const { return f.passed() && h.passed(); }
};

/// Runs all checks for both kinds. Failures are reported in the verdict.
ConjectureVerdict verify_conjecture(int gamma, bool deep = false);

/// Verdicts for gamma = 0..gamma_max, in gamma order. The parallel version
/// distributes gamma values over `jobs` OpenMP threads.
std::vector<ConjectureVerdict> verify_sweep(int gamma_max, int jobs, bool deep = false);
std::vector<ConjectureVerdict> verify_sweep_serial(int gamma_max, bool deep = false);

/// One machine-readable line per kind, e.g.
/// "gamma=3 kind=F biharmonic=pass boundary=pass builder=pass".
std::string report_lines(const ConjectureVerdict& v);

} // namespace biharm
