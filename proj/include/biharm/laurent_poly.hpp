#pragma once

#include "biharm/rational.hpp"

#include <map>
#include <string>

namespace biharm {

/// Sparse Laurent polynomial in t = 1 - x with rational coefficients.
///
/// No stored coefficient is ever zero, so the zero polynomial is the empty
/// map and equality is plain map equality.
class LaurentPoly {
public:
    using Terms = std::map<int, Rational>;

    LaurentPoly() = default;
    explicit LaurentPoly(Terms terms);

    static LaurentPoly monomial(int exponent, const Rational& coeff = 1);
    static LaurentPoly constant(const Rational& c) { return monomial(0, c); }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    /// Coefficient of t^k (zero when absent).
    Rational coeff(int k) const;
    int min_exponent() const;
    int max_exponent() const;

    /// Accumulates c * t^k, dropping the entry if it cancels.
    void add_term(int k, const Rational& c);

    /// Multiplication by t^shift.
    LaurentPoly shifted(int shift) const;

    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly& operator-=(const LaurentPoly& other);
    LaurentPoly& operator*=(const Rational& c);

    friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) { return p += q; }
    friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) { return p -= q; }
    friend LaurentPoly operator-(const LaurentPoly& p) { return p * Rational(-1); }
    friend LaurentPoly operator*(LaurentPoly p, const Rational& c) { return p *= c; }
    friend LaurentPoly operator*(const Rational& c, LaurentPoly p) { return p *= c; }
    friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);
    friend bool operator==(const LaurentPoly& p, const LaurentPoly& q) { return p.terms_ == q.terms_; }

private:
    Terms terms_;
};

/// d/dx of p(1 - x), expressed again in t: d/dx t^k = -k t^(k-1).
LaurentPoly d_dx(const LaurentPoly& p);

/// Multiplication by x = 1 - t.
LaurentPoly mul_x(const LaurentPoly& p);

/// Value at a given t (long double keeps large-gamma cancellation in check).
long double evaluate(const LaurentPoly& p, long double t);

/// "3*t^4 - 3/2*t^5" style rendering, ascending exponents.
std::string to_string(const LaurentPoly& p);

} // namespace biharm
