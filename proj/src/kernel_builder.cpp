#include "biharm/kernel_builder.hpp"

#include "biharm/error.hpp"
#include "biharm/operators.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>

namespace biharm {

const char* to_string(KernelKind kind) noexcept {
    return kind == KernelKind::F ? "F" : "H";
}

KernelKind kernel_kind_from_string(const std::string& s) {
    if (s == "F") {
        return KernelKind::F;
    }
    if (s == "H") {
        return KernelKind::H;
    }
    throw Error(ErrorCode::invalid_argument, "kernel kind must be F or H, got '" + s + "'");
}

Monomial leading_term(const KernelSpec& spec) {
    if (spec.gamma < 0) {
        throw Error(ErrorCode::invalid_argument, "gamma must be >= 0");
    }
    if (spec.kind == KernelKind::F) {
        return {spec.gamma + 2, 2 * spec.gamma + 3};
    }
    return {spec.gamma + 1, 2 * spec.gamma + 2};
}

namespace {

using Key = std::pair<int, int>; // (level, exponent)

void add_image(std::map<Key, Rational>& image, int gamma, const Monomial& m, const Rational& scale) {
    const auto push = [&](int level, const LaurentPoly& p) {
        for (const auto& [e, c] : p.terms()) {
            image[{level, e}] += scale * c;
        }
    };
    push(m.beta, monomial_rule(gamma, m.beta, m.k, MonomialRule::PP));
    push(m.beta + 1, monomial_rule(gamma, m.beta, m.k, MonomialRule::Mixed));
    push(m.beta + 2, monomial_rule(gamma, m.beta, m.k, MonomialRule::QQ));
}

std::pair<int, int> exponent_window(const KernelSpec& spec, int beta, AnsatzGrid grid) {
    const int g = spec.gamma;
    const int hi = beta + g + 1;
    if (grid == AnsatzGrid::wide) {
        return {beta, hi};
    }
    const int floor_k = spec.kind == KernelKind::F ? 2 * beta - 1 : 2 * beta;
    return {std::max(floor_k, g + 2), hi};
}

} // namespace

Ansatz make_ansatz(const KernelSpec& spec, AnsatzGrid grid) {
    Ansatz ansatz;
    ansatz.spec = spec;
    ansatz.leading = leading_term(spec);
    for (int beta = 1; beta < ansatz.leading.beta; ++beta) {
        const auto [lo, hi] = exponent_window(spec, beta, grid);
        for (int k = lo; k <= hi; ++k) {
            ansatz.unknowns.push_back({beta, k});
        }
    }

    std::map<Key, std::vector<std::pair<std::size_t, Rational>>> rows;
    for (std::size_t i = 0; i < ansatz.unknowns.size(); ++i) {
        std::map<Key, Rational> image;
        add_image(image, spec.gamma, ansatz.unknowns[i], 1);
        for (auto& [key, c] : image) {
            if (c != 0) {
                rows[key].emplace_back(i, std::move(c));
            }
        }
    }
    std::map<Key, Rational> fixed;
    add_image(fixed, spec.gamma, ansatz.leading, 1);
    for (const auto& [key, c] : fixed) {
        if (c != 0) {
            rows.try_emplace(key);
        }
    }

    ansatz.system = RationalLinearSystem(ansatz.unknowns.size());
    for (auto& [key, entries] : rows) {
        const auto it = fixed.find(key);
        const Rational rhs = it == fixed.end() ? Rational(0) : Rational(-it->second);
        ansatz.system.add_row(std::move(entries), rhs);
    }
    return ansatz;
}

KernelExpansion assemble(const Ansatz& ansatz, std::span<const Rational> values) {
    if (values.size() != ansatz.unknowns.size()) {
        throw Error(ErrorCode::invalid_argument, "value count does not match the ansatz");
    }
    KernelExpansion u;
    u.gamma = ansatz.spec.gamma;
    u.add_term(ansatz.leading.beta, ansatz.leading.k, 1);
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] != 0) {
            u.add_term(ansatz.unknowns[i].beta, ansatz.unknowns[i].k, values[i]);
        }
    }
    return u;
}

namespace {

std::optional<KernelExpansion> try_solve(const Ansatz& ansatz) {
    if (ansatz.unknowns.empty()) {
        KernelExpansion u = assemble(ansatz, {});
        if (!is_zero(biharmonic(u))) {
            return std::nullopt;
        }
        return u;
    }
    if (ansatz.system.rows() == 0) {
        return assemble(ansatz, std::vector<Rational>(ansatz.unknowns.size(), Rational(0)));
    }
    const LinearSolution sol = solve_linear(ansatz.system);
    if (sol.kind == LinearSolution::Kind::infeasible) {
        return std::nullopt;
    }
    return assemble(ansatz, sol.particular);
}

std::string describe(const KernelSpec& spec) {
    return std::string(to_string(spec.kind)) + "_" + std::to_string(spec.gamma);
}

} // namespace

RawSolution build_raw(const KernelSpec& spec) {
    std::optional<KernelExpansion> u = try_solve(make_ansatz(spec, AnsatzGrid::tight));
    if (!u) {
        u = try_solve(make_ansatz(spec, AnsatzGrid::wide));
        if (!u) {
            throw Error(ErrorCode::ansatz_insufficient,
                        "no biharmonic expansion on the tight or wide grid for " + describe(spec));
        }
        for (const auto& [beta, f] : u->terms) {
            if (f.min_exponent() < 2 * beta - 1) {
                throw Error(ErrorCode::non_delta_boundary,
                            "wide-grid solution for " + describe(spec) + " keeps t^" +
                                std::to_string(f.min_exponent()) + " at beta=" + std::to_string(beta));
            }
        }
    }
    if (!is_zero(biharmonic(*u))) {
        throw Error(ErrorCode::ansatz_insufficient, "solution for " + describe(spec) + " is not biharmonic");
    }
    BoundaryData boundary = expansion_boundary(*u);
    return {std::move(*u), std::move(boundary)};
}

KernelExpansion normalize_H(const RawSolution& raw) {
    if (raw.boundary.a != 0 || raw.boundary.b == 0) {
        throw Error(ErrorCode::invalid_argument,
                    "H normalization needs boundary data (0, b) with b != 0, got (" +
                        to_string(raw.boundary.a) + ", " + to_string(raw.boundary.b) + ")");
    }
    return raw.expansion * Rational(1 / raw.boundary.b);
}

KernelExpansion normalize_F(const RawSolution& raw, const KernelExpansion& h) {
    if (raw.boundary.a == 0) {
        throw Error(ErrorCode::invalid_argument, "F normalization needs a != 0");
    }
    if (h.gamma != raw.expansion.gamma) {
        throw Error(ErrorCode::invalid_argument, "H kernel has a different gamma");
    }
    return (raw.expansion - raw.boundary.b * h) * Rational(1 / raw.boundary.a);
}

KernelExpansion build(const KernelSpec& spec) {
    const RawSolution h_raw = build_raw({spec.gamma, KernelKind::H});
    KernelExpansion h = normalize_H(h_raw);
    KernelExpansion out = spec.kind == KernelKind::H ? std::move(h)
                                                     : normalize_F(build_raw(spec), h);

    const BoundaryData expected = spec.kind == KernelKind::F ? BoundaryData{1, 0} : BoundaryData{0, 1};
    if (!is_zero(biharmonic(out)) || expansion_boundary(out) != expected) {
        throw Error(ErrorCode::ansatz_insufficient, "post-conditions failed for " + describe(spec));
    }
    return out;
}

} // namespace biharm
