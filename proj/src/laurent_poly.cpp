#include "biharm/laurent_poly.hpp"

#include "biharm/error.hpp"

#include <cmath>
#include <sstream>

namespace biharm {

LaurentPoly::LaurentPoly(Terms terms) : terms_(std::move(terms)) {
    std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

LaurentPoly LaurentPoly::monomial(int exponent, const Rational& coeff) {
    LaurentPoly p;
    p.add_term(exponent, coeff);
    return p;
}

Rational LaurentPoly::coeff(int k) const {
    const auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
}

int LaurentPoly::min_exponent() const {
    if (terms_.empty()) {
        throw Error(ErrorCode::invalid_argument, "min_exponent of zero polynomial");
    }
    return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
    if (terms_.empty()) {
        throw Error(ErrorCode::invalid_argument, "max_exponent of zero polynomial");
    }
    return terms_.rbegin()->first;
}

void LaurentPoly::add_term(int k, const Rational& c) {
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

LaurentPoly LaurentPoly::shifted(int shift) const {
    LaurentPoly out;
    for (const auto& [k, c] : terms_) {
        out.terms_.emplace_hint(out.terms_.end(), k + shift, c);
    }
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
    for (const auto& [k, c] : other.terms_) {
        add_term(k, c);
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
    for (const auto& [k, c] : other.terms_) {
        add_term(k, -c);
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& kv : terms_) {
        kv.second *= c;
    }
    return *this;
}

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
    LaurentPoly out;
    for (const auto& [i, a] : p.terms_) {
        for (const auto& [j, b] : q.terms_) {
            out.add_term(i + j, a * b);
        }
    }
    return out;
}

LaurentPoly d_dx(const LaurentPoly& p) {
    LaurentPoly out;
    for (const auto& [k, c] : p.terms()) {
        out.add_term(k - 1, -k * c);
    }
    return out;
}

LaurentPoly mul_x(const LaurentPoly& p) {
    return p - p.shifted(1);
}

long double evaluate(const LaurentPoly& p, long double t) {
    long double sum = 0.0L;
    for (const auto& [k, c] : p.terms()) {
        sum += to_long_double(c) * std::pow(t, static_cast<long double>(k));
    }
    return sum;
}

std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : p.terms()) {
        const Rational mag = abs(c);
        if (first) {
            os << (c < 0 ? "-" : "");
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << to_string(mag);
            continue;
        }
        if (mag != 1) {
            os << to_string(mag) << "*";
        }
        os << "t^" << k;
    }
    return os.str();
}

} // namespace biharm
