#include "biharm/error.hpp"
#include "biharm/kernel_builder.hpp"
#include "biharm/operators.hpp"

#include "fixtures/published_kernels.hpp"

#include <gtest/gtest.h>

using namespace biharm;

namespace {

Rational value_at_origin(const LaurentPoly& f) {
    // x = 0 means t = 1.
    Rational s = 0;
    for (const auto& [k, c] : f.terms()) {
        s += c;
    }
    return s;
}

} // namespace

TEST(LeadingTerm, Positions) {
    EXPECT_EQ(leading_term({2, KernelKind::F}), (Monomial{4, 7}));
    EXPECT_EQ(leading_term({2, KernelKind::H}), (Monomial{3, 6}));
    EXPECT_EQ(leading_term({0, KernelKind::H}), (Monomial{1, 2}));
}

TEST(BuildRaw, GammaTwoHDirection) {
    const RawSolution raw = build_raw({2, KernelKind::H});
    EXPECT_EQ(raw.expansion, fixtures::raw_H2());
    EXPECT_EQ(raw.expansion.coeff(1, 4), 3);
    EXPECT_EQ(raw.expansion.coeff(2, 5), 3);
    EXPECT_EQ(raw.boundary, (BoundaryData{0, 6}));
}

TEST(BuildRaw, GammaTwoFDirection) {
    const RawSolution raw = build_raw({2, KernelKind::F});
    EXPECT_EQ(raw.expansion, fixtures::raw_F2());
    EXPECT_EQ(raw.expansion.coeff(1, 4), -8);
    EXPECT_EQ(raw.expansion.coeff(2, 5), -6);
    EXPECT_EQ(raw.boundary, (BoundaryData{2, -18}));
}

TEST(BuildRaw, GammaZeroH) {
    const RawSolution raw = build_raw({0, KernelKind::H});
    KernelExpansion expected;
    expected.add_term(1, 2, 1);
    EXPECT_EQ(raw.expansion, expected);
    EXPECT_EQ(raw.boundary, (BoundaryData{0, 2}));
}

TEST(BuildRaw, GammaTwoLinearSystemIsSolvedExactly) {
    const Ansatz ansatz = make_ansatz({2, KernelKind::H});
    const LinearSolution s = solve_linear(ansatz.system);
    ASSERT_NE(s.kind, LinearSolution::Kind::infeasible);
    EXPECT_TRUE(ansatz.system.satisfied_by(s.particular));
    EXPECT_TRUE(is_zero(biharmonic(assemble(ansatz, s.particular))));
}

TEST(Normalize, HDividesByB) {
    EXPECT_EQ(normalize_H(build_raw({2, KernelKind::H})), fixtures::H2());
    EXPECT_EQ(normalize_H(build_raw({0, KernelKind::H})), fixtures::H0());
    EXPECT_EQ(normalize_H(build_raw({1, KernelKind::H})), fixtures::H1());
}

TEST(Normalize, FSubtractsHAndDividesByA) {
    for (int gamma = 0; gamma <= 2; ++gamma) {
        const KernelExpansion h = normalize_H(build_raw({gamma, KernelKind::H}));
        const KernelExpansion f = normalize_F(build_raw({gamma, KernelKind::F}), h);
        EXPECT_EQ(f, fixtures::ten_published()[2 * gamma].expansion) << gamma;
    }
}

TEST(Normalize, PreconditionsEnforced) {
    EXPECT_THROW(normalize_H(build_raw({2, KernelKind::F})), Error);
    RawSolution zero_a = build_raw({2, KernelKind::H});
    EXPECT_THROW(normalize_F(zero_a, fixtures::H2()), Error);
}

TEST(Normalize, ResultIndependentOfRawRepresentative) {
    const KernelExpansion h = fixtures::H2();
    const RawSolution f_raw = build_raw({2, KernelKind::F});
    const RawSolution h_raw = build_raw({2, KernelKind::H});
    RawSolution mixed;
    mixed.expansion = Rational(3) * f_raw.expansion + make_rational(-5, 4) * h_raw.expansion;
    mixed.boundary = expansion_boundary(mixed.expansion);
    EXPECT_EQ(normalize_F(mixed, h), fixtures::F2());
}

TEST(Build, TenPublishedKernels) {
    for (const auto& fx : fixtures::ten_published()) {
        EXPECT_EQ(build(fx.spec), fx.expansion) << fx.name;
    }
}

TEST(Build, GammaFiveTables) {
    EXPECT_EQ(build({5, KernelKind::F}), fixtures::F5());
    EXPECT_EQ(build({5, KernelKind::H}), fixtures::H5());
}

TEST(Build, NegativeGammaRejected) { EXPECT_THROW(build({-1, KernelKind::F}), Error); }

TEST(Build, BiharmonicAndBoundaryExact) {
    for (int gamma = 0; gamma <= 20; ++gamma) {
        const KernelExpansion f = build({gamma, KernelKind::F});
        const KernelExpansion h = build({gamma, KernelKind::H});
        EXPECT_TRUE(is_zero(biharmonic(f))) << gamma;
        EXPECT_TRUE(is_zero(biharmonic(h))) << gamma;
        EXPECT_EQ(expansion_boundary(f), (BoundaryData{1, 0})) << gamma;
        EXPECT_EQ(expansion_boundary(h), (BoundaryData{0, 1})) << gamma;
    }
}

TEST(Build, ValuesAtOrigin) {
    for (int gamma = 0; gamma <= 15; ++gamma) {
        const KernelExpansion f = build({gamma, KernelKind::F});
        Rational f0 = 0;
        for (const auto& [beta, p] : f.terms) {
            const Rational v = value_at_origin(p);
            f0 += v;
            if (beta == 1 || beta == gamma + 2) {
                EXPECT_EQ(v, make_rational(1, 2)) << gamma;
            } else {
                EXPECT_EQ(v, 0) << gamma << " beta=" << beta;
            }
        }
        EXPECT_EQ(f0, 1);

        const KernelExpansion h = build({gamma, KernelKind::H});
        Rational h0 = 0, harmonic = 0;
        for (const auto& [beta, p] : h.terms) {
            EXPECT_EQ(2 * beta * value_at_origin(p), 1) << gamma;
            h0 += value_at_origin(p);
            harmonic += make_rational(1, 2 * beta);
        }
        EXPECT_EQ(h0, harmonic);
    }
    EXPECT_EQ(value_at_origin(fixtures::H1().terms.at(1)) + value_at_origin(fixtures::H1().terms.at(2)),
              make_rational(3, 4));
}

TEST(Build, SupportBounds) {
    for (int gamma = 0; gamma <= 20; ++gamma) {
        for (KernelKind kind : {KernelKind::F, KernelKind::H}) {
            const KernelExpansion u = build({gamma, kind});
            const int beta_max = kind == KernelKind::F ? gamma + 2 : gamma + 1;
            EXPECT_EQ(u.terms.begin()->first, 1);
            EXPECT_EQ(u.terms.rbegin()->first, beta_max);
            for (const auto& [beta, p] : u.terms) {
                const int lo = kind == KernelKind::F ? std::max(2 * beta - 1, gamma + 2) : std::max(2 * beta, gamma + 2);
                EXPECT_GE(p.min_exponent(), lo) << gamma << " beta=" << beta;
                EXPECT_LE(p.max_exponent(), beta + gamma + 1) << gamma << " beta=" << beta;
            }
        }
    }
}

TEST(Build, KindParsing) {
    EXPECT_EQ(kernel_kind_from_string("F"), KernelKind::F);
    EXPECT_EQ(kernel_kind_from_string("H"), KernelKind::H);
    EXPECT_THROW(kernel_kind_from_string("G"), Error);
    EXPECT_STREQ(to_string(KernelKind::H), "H");
}
