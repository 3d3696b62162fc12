#include "biharm/conjecture.hpp"

#include "biharm/error.hpp"
#include "biharm/operators.hpp"

#include <algorithm>
#include <sstream>

namespace biharm {

namespace {

int last_index(int gamma, KernelKind kind) {
    return kind == KernelKind::F ? (gamma + 1) / 2 : gamma / 2;
}

int top_beta(int gamma, KernelKind kind) {
    return kind == KernelKind::F ? gamma + 2 : gamma + 1;
}

// 2 for F, 2 beta for H.
Rational row_normalizer(KernelKind kind, int beta) {
    return kind == KernelKind::F ? Rational(2) : Rational(2 * beta);
}

} // namespace

int binomial_row(int gamma, KernelKind kind, int k) {
    return (kind == KernelKind::F ? gamma + 1 : gamma) - 2 * k;
}

ConjectureCoefficients solve_ck(int gamma, KernelKind kind) {
    if (gamma < 0) {
        throw Error(ErrorCode::invalid_argument, "gamma must be >= 0");
    }
    ConjectureCoefficients out{gamma, kind, {Rational(1)}};
    const Rational target = kind == KernelKind::F ? 0 : 1;
    for (int j = 1; j <= last_index(gamma, kind); ++j) {
        // The c_j coefficient is C(row_j, 0) = 1.
        Rational acc = target;
        for (int k = 0; k < j; ++k) {
            acc -= out.c[k] * Rational(binomial(binomial_row(gamma, kind, k), j - k));
        }
        out.c.push_back(acc);
    }
    return out;
}

KernelExpansion conjectured_kernel(int gamma, KernelKind kind) {
    const ConjectureCoefficients cc = solve_ck(gamma, kind);
    KernelExpansion u;
    u.gamma = gamma;
    const int floor_offset = kind == KernelKind::F ? -1 : 0;
    for (int beta = 1; beta <= top_beta(gamma, kind); ++beta) {
        const int upper = beta + gamma + 1 - std::max(2 * beta + floor_offset, gamma + 2);
        const Rational inv_norm = 1 / row_normalizer(kind, beta);
        for (int k = 0; k <= upper; ++k) {
            const Integer binom = binomial(binomial_row(gamma, kind, k), beta - 1 - k);
            if (binom != 0) {
                u.add_term(beta, beta + gamma + 1 - k, cc.c[k] * Rational(binom) * inv_norm);
            }
        }
    }
    return u;
}

PascalReport pascal_columns(const KernelExpansion& u, KernelKind kind) {
    const int g = u.gamma;
    PascalReport report;
    for (int k = 0; k <= last_index(g, kind); ++k) {
        // First nonzero entry of column k sits at beta = k + 1, exponent g + 2.
        report.column_scales.push_back(row_normalizer(kind, k + 1) * u.coeff(k + 1, g + 2));
    }

    const auto violation = [&](int beta, int k, const std::string& why) {
        report.ok = false;
        report.first_violation = Monomial{beta, k};
        report.message = "beta=" + std::to_string(beta) + " k=" + std::to_string(k) + ": " + why;
    };

    const int max_beta = std::max(top_beta(g, kind), u.terms.empty() ? 0 : u.terms.rbegin()->first);
    for (int beta = 1; beta <= max_beta; ++beta) {
        const auto it = u.terms.find(beta);
        const LaurentPoly empty;
        const LaurentPoly& f = it == u.terms.end() ? empty : it->second;
        // Walk offsets from the top exponent down, then sweep for strays.
        for (int k = 0; k <= last_index(g, kind); ++k) {
            const int exponent = beta + g + 1 - k;
            const Rational expected = beta > top_beta(g, kind)
                                          ? Rational(0)
                                          : report.column_scales[k] *
                                                Rational(binomial(binomial_row(g, kind, k), beta - 1 - k));
            const Rational actual = row_normalizer(kind, beta) * f.coeff(exponent);
            if (actual != expected) {
                violation(beta, k, "expected " + to_string(expected) + ", found " + to_string(actual));
                return report;
            }
        }
        for (const auto& [e, c] : f.terms()) {
            const int k = beta + g + 1 - e;
            if (k < 0 || k > last_index(g, kind)) {
                violation(beta, k, "monomial t^" + std::to_string(e) + " outside every column");
                return report;
            }
        }
    }
    return report;
}

namespace {

KindVerdict check_kind(int gamma, KernelKind kind, const KernelExpansion& built, const std::string& build_error,
                       bool deep) {
    KindVerdict v;
    v.kind = kind;
    std::ostringstream detail;
    try {
        const KernelExpansion conj = conjectured_kernel(gamma, kind);
        v.biharmonic = is_zero(biharmonic(conj));
        const BoundaryData expected = kind == KernelKind::F ? BoundaryData{1, 0} : BoundaryData{0, 1};
        const BoundaryData got = expansion_boundary(conj);
        v.boundary = got == expected;
        if (!v.boundary) {
            detail << "boundary=(" << to_string(got.a) << "," << to_string(got.b) << ") ";
        }
        if (build_error.empty()) {
            v.matches_builder = built == conj;
            if (!v.matches_builder) {
                detail << "builder and closed form differ ";
            }
        } else {
            detail << build_error << ' ';
        }
        if (deep) {
            bool ok = true;
            for (const auto& [beta, f] : conj.terms) {
                for (const auto& [k, c] : f.terms()) {
                    for (MonomialRule rule : {MonomialRule::QQ, MonomialRule::Mixed, MonomialRule::PP}) {
                        ok = ok && monomial_rule(gamma, beta, k, rule) == monomial_rule_generic(gamma, beta, k, rule);
                    }
                }
            }
            v.rules = ok;
            if (!ok) {
                detail << "monomial rule mismatch ";
            }
        }
    } catch (const std::exception& e) {
        detail << e.what();
    }
    v.detail = detail.str();
    if (!v.detail.empty() && v.detail.back() == ' ') {
        v.detail.pop_back();
    }
    return v;
}

} // namespace

ConjectureVerdict verify_conjecture(int gamma, bool deep) {
    KernelExpansion h, f;
    std::string h_error, f_error;
    try {
        h = build({gamma, KernelKind::H});
    } catch (const std::exception& e) {
        h_error = e.what();
    }
    if (h_error.empty()) {
        try {
            f = normalize_F(build_raw({gamma, KernelKind::F}), h);
        } catch (const std::exception& e) {
            f_error = e.what();
        }
    } else {
        f_error = "H_" + std::to_string(gamma) + " unavailable";
    }
    return {gamma, check_kind(gamma, KernelKind::F, f, f_error, deep),
            check_kind(gamma, KernelKind::H, h, h_error, deep)};
}

std::vector<ConjectureVerdict> verify_sweep_serial(int gamma_max, bool deep) {
    std::vector<ConjectureVerdict> out;
    for (int g = 0; g <= gamma_max; ++g) {
        out.push_back(verify_conjecture(g, deep));
    }
    return out;
}

std::vector<ConjectureVerdict> verify_sweep(int gamma_max, int jobs, bool deep) {
    if (gamma_max < 0) {
        throw Error(ErrorCode::invalid_argument, "gamma_max must be >= 0");
    }
    std::vector<ConjectureVerdict> out(static_cast<std::size_t>(gamma_max) + 1);
    // Largest gamma first: cost grows steeply with gamma.
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs < 1 ? 1 : jobs)
    for (int i = 0; i <= gamma_max; ++i) {
        const int g = gamma_max - i;
        out[g] = verify_conjecture(g, deep);
    }
    return out;
}

std::string report_lines(const ConjectureVerdict& v) {
    std::ostringstream os;
    const auto pf = [](bool ok) { return ok ? "pass" : "FAIL"; };
    for (const KindVerdict* kv : {&v.f, &v.h}) {
        os << "gamma=" << v.gamma << " kind=" << to_string(kv->kind) << " biharmonic=" << pf(kv->biharmonic)
           << " boundary=" << pf(kv->boundary) << " builder=" << pf(kv->matches_builder);
        if (kv->rules) {
            os << " rules=" << pf(*kv->rules);
        }
        os << " verdict=" << pf(kv->passed());
        if (!kv->detail.empty()) {
            os << " detail=\"" << kv->detail << '"';
        }
        os << '\n';
    }
    return os.str();
}

} // namespace biharm
