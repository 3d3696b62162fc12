#include "biharm/error.hpp"
#include "biharm/laurent_poly.hpp"
#include "biharm/linear_system.hpp"
#include "biharm/rational.hpp"

#include <gtest/gtest.h>

#include <random>
#include <vector>

using namespace biharm;

namespace {

LaurentPoly t(int k, const Rational& c = 1) { return LaurentPoly::monomial(k, c); }

LaurentPoly random_poly(std::mt19937& rng, int lo, int hi) {
    std::uniform_int_distribution<int> count(0, 5), exponent(lo, hi), num(-9, 9), den(1, 6);
    LaurentPoly p;
    for (int i = count(rng); i > 0; --i) {
        p.add_term(exponent(rng), make_rational(num(rng), den(rng)));
    }
    return p;
}

// Dense coefficients in x of a polynomial in t = 1 - x (non-negative exponents).
std::vector<Rational> to_dense_x(const LaurentPoly& p) {
    std::vector<Rational> dense(p.is_zero() ? 1 : p.max_exponent() + 1, Rational(0));
    for (const auto& [k, c] : p.terms()) {
        for (int j = 0; j <= k; ++j) {
            Rational term = c * Rational(binomial(k, j));
            dense[j] += (j % 2 == 0) ? term : Rational(-term);
        }
    }
    return dense;
}

std::vector<Rational> dense_derivative(const std::vector<Rational>& a) {
    std::vector<Rational> d(a.size() > 1 ? a.size() - 1 : 1, Rational(0));
    for (std::size_t j = 1; j < a.size(); ++j) {
        d[j - 1] = a[j] * Rational(static_cast<long>(j));
    }
    return d;
}

bool dense_equal(std::vector<Rational> a, std::vector<Rational> b) {
    a.resize(std::max(a.size(), b.size()), Rational(0));
    b.resize(a.size(), Rational(0));
    return a == b;
}

} // namespace

TEST(Rational, CanonicalForm) {
    const Rational q = make_rational(6, -4);
    EXPECT_EQ(q.get_num(), -3);
    EXPECT_EQ(q.get_den(), 2);
    EXPECT_EQ(to_string(q), "-3/2");
    EXPECT_EQ(to_string(make_rational(10, 5)), "2");
    EXPECT_EQ(rational_from_strings("-12", "8"), make_rational(-3, 2));
}

TEST(Rational, ZeroDenominatorThrows) {
    EXPECT_THROW(make_rational(1, 0), Error);
    EXPECT_THROW(rational_from_strings("1", "0"), Error);
    EXPECT_THROW(rational_from_strings("x", "2"), Error);
}

TEST(Rational, Binomial) {
    EXPECT_EQ(binomial(6, 3), 20);
    EXPECT_EQ(binomial(5, -1), 0);
    EXPECT_EQ(binomial(5, 6), 0);
    EXPECT_EQ(binomial(0, 0), 1);
    EXPECT_THROW(binomial(-1, 0), Error);
}

TEST(LaurentPoly, Cancellation) { EXPECT_EQ((t(2) - t(1)) + t(1), t(2)); }

TEST(LaurentPoly, ExponentAddition) { EXPECT_EQ(t(-2) * t(5), t(3)); }

TEST(LaurentPoly, ScaledTableRow) {
    const LaurentPoly row = t(6, 4) - t(5, 4);
    EXPECT_EQ(row * make_rational(1, 2), t(6, 2) - t(5, 2));
}

TEST(LaurentPoly, NoZeroCoefficientsStored) {
    LaurentPoly p = t(3, 2);
    p.add_term(3, -2);
    EXPECT_TRUE(p.is_zero());
    EXPECT_EQ(p.size(), 0u);
    EXPECT_THROW(p.max_exponent(), Error);
}

TEST(LaurentPoly, DerivativeExamples) {
    EXPECT_EQ(d_dx(t(4)), t(3, -4));
    EXPECT_TRUE(d_dx(LaurentPoly::constant(5)).is_zero());
    EXPECT_EQ(d_dx(t(4)), -4 * t(3));
}

TEST(LaurentPoly, DerivativeMatchesDenseOracle) {
    std::mt19937 rng(7);
    for (int i = 0; i < 300; ++i) {
        const LaurentPoly p = random_poly(rng, 0, 12);
        EXPECT_TRUE(dense_equal(to_dense_x(d_dx(p)), dense_derivative(to_dense_x(p)))) << to_string(p);
    }
}

TEST(LaurentPoly, MulXExamples) {
    EXPECT_EQ(mul_x(LaurentPoly::constant(1)), LaurentPoly::constant(1) - t(1));
    EXPECT_EQ(mul_x(t(5)), t(5) - t(6));
    EXPECT_EQ(mul_x(t(-1)), t(-1) - LaurentPoly::constant(1));
}

TEST(LaurentPoly, RingAxiomsRandomized) {
    std::mt19937 rng(2024);
    for (int i = 0; i < 1000; ++i) {
        const LaurentPoly p = random_poly(rng, -6, 8), q = random_poly(rng, -6, 8), r = random_poly(rng, -6, 8);
        ASSERT_EQ((p + q) + r, p + (q + r));
        ASSERT_EQ(p + q, q + p);
        ASSERT_EQ((p * q) * r, p * (q * r));
        ASSERT_EQ(p * q, q * p);
        ASSERT_EQ(p * (q + r), p * q + p * r);
        ASSERT_EQ(p - p, LaurentPoly());
        ASSERT_EQ(p * LaurentPoly::constant(1), p);
    }
}

TEST(LaurentPoly, LeibnizRuleRandomized) {
    std::mt19937 rng(99);
    for (int i = 0; i < 500; ++i) {
        const LaurentPoly p = random_poly(rng, -5, 9), q = random_poly(rng, -5, 9);
        ASSERT_EQ(d_dx(p * q), d_dx(p) * q + p * d_dx(q));
    }
}

TEST(LaurentPoly, MulXIsMultiplicationByOneMinusT) {
    std::mt19937 rng(5);
    const LaurentPoly x = LaurentPoly::constant(1) - t(1);
    for (int i = 0; i < 200; ++i) {
        const LaurentPoly p = random_poly(rng, -4, 8);
        ASSERT_EQ(mul_x(p), x * p);
    }
}

TEST(LaurentPoly, EvaluateMatchesTerms) {
    const LaurentPoly p = t(2, make_rational(1, 2)) - t(-1, 3);
    EXPECT_NEAR(static_cast<double>(evaluate(p, 0.5L)), 0.125 - 6.0, 1e-15);
}

TEST(SolveLinear, HDirectionConstants) {
    RationalLinearSystem sys(2);
    const std::vector<Rational> r1{6, -10}, r2{0, 4};
    sys.add_row(r1, -12);
    sys.add_row(r2, 12);
    const LinearSolution s = solve_linear(sys);
    ASSERT_EQ(s.kind, LinearSolution::Kind::unique);
    EXPECT_EQ(s.particular, (std::vector<Rational>{3, 3}));
}

TEST(SolveLinear, FDirectionConstants) {
    RationalLinearSystem sys(2);
    const std::vector<Rational> r1{6, -10}, r2{0, 4};
    sys.add_row(r1, 12);
    sys.add_row(r2, -24);
    const LinearSolution s = solve_linear(sys);
    ASSERT_EQ(s.kind, LinearSolution::Kind::unique);
    EXPECT_EQ(s.particular, (std::vector<Rational>{-8, -6}));
}

TEST(SolveLinear, TautologyIsParametric) {
    RationalLinearSystem sys(1);
    const std::vector<Rational> row{0};
    sys.add_row(row, 0);
    const LinearSolution s = solve_linear(sys);
    ASSERT_EQ(s.kind, LinearSolution::Kind::parametric);
    EXPECT_EQ(s.free_columns.size(), 1u);
    EXPECT_EQ(s.homogeneous_basis.size(), 1u);
}

TEST(SolveLinear, Infeasible) {
    RationalLinearSystem sys(2);
    sys.add_row({{0, 1}, {1, 1}}, 1);
    sys.add_row({{0, 2}, {1, 2}}, 3);
    EXPECT_EQ(solve_linear(sys).kind, LinearSolution::Kind::infeasible);
}

TEST(SolveLinear, EmptySystemThrows) {
    RationalLinearSystem sys(2);
    EXPECT_THROW(solve_linear(sys), Error);
}

TEST(SolveLinear, RandomSystemsSubstituteBack) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> dim(1, 7), val(-5, 5), den(1, 4), coin(0, 2);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = dim(rng), m = dim(rng);
        std::vector<Rational> x0(n);
        for (auto& v : x0) {
            v = make_rational(val(rng), den(rng));
        }
        RationalLinearSystem sys(n);
        for (int i = 0; i < m; ++i) {
            std::vector<Rational> row(n, Rational(0));
            Rational rhs = 0;
            for (int j = 0; j < n; ++j) {
                if (coin(rng) != 0) {
                    row[j] = val(rng);
                    rhs += row[j] * x0[j];
                }
            }
            sys.add_row(row, rhs);
        }
        const LinearSolution s = solve_linear(sys);
        ASSERT_NE(s.kind, LinearSolution::Kind::infeasible);
        ASSERT_TRUE(sys.satisfied_by(s.particular));
        for (const auto& h : s.homogeneous_basis) {
            std::vector<Rational> shifted = s.particular;
            for (int j = 0; j < n; ++j) {
                shifted[j] += Rational(3) * h[j];
            }
            ASSERT_TRUE(sys.satisfied_by(shifted));
        }
        ASSERT_EQ(s.free_columns.size(), s.homogeneous_basis.size());
        if (s.kind == LinearSolution::Kind::unique) {
            ASSERT_EQ(s.particular, x0);
        }
    }
}
