#include "biharm/expansion.hpp"

#include "biharm/error.hpp"

namespace biharm {

void accumulate(CoeffSequence& seq, int beta, const LaurentPoly& p) {
    if (p.is_zero()) {
        return;
    }
    auto [it, inserted] = seq.try_emplace(beta, p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero()) {
            seq.erase(it);
        }
    }
}

bool is_zero(const CoeffSequence& seq) {
    for (const auto& [beta, p] : seq) {
        if (!p.is_zero()) {
            return false;
        }
    }
    return true;
}

Rational KernelExpansion::coeff(int beta, int k) const {
    const auto it = terms.find(beta);
    return it == terms.end() ? Rational(0) : it->second.coeff(k);
}

void KernelExpansion::add_term(int beta, int k, const Rational& c) {
    if (beta < 1) {
        throw Error(ErrorCode::invalid_argument, "beta must be >= 1");
    }
    accumulate(terms, beta, LaurentPoly::monomial(k, c));
}

KernelExpansion& KernelExpansion::operator+=(const KernelExpansion& other) {
    for (const auto& [beta, p] : other.terms) {
        accumulate(terms, beta, p);
    }
    return *this;
}

KernelExpansion& KernelExpansion::operator-=(const KernelExpansion& other) {
    for (const auto& [beta, p] : other.terms) {
        accumulate(terms, beta, -p);
    }
    return *this;
}

KernelExpansion& KernelExpansion::operator*=(const Rational& c) {
    if (c == 0) {
        terms.clear();
        return *this;
    }
    for (auto& kv : terms) {
        kv.second *= c;
    }
    return *this;
}

std::size_t KernelExpansion::monomial_count() const {
    std::size_t n = 0;
    for (const auto& kv : terms) {
        n += kv.second.size();
    }
    return n;
}

} // namespace biharm
