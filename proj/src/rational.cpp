#include "biharm/rational.hpp"

#include "biharm/error.hpp"

#include <cstdlib>

namespace biharm {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::invalid_argument: return "INVALID_ARGUMENT";
    case ErrorCode::ansatz_insufficient: return "ANSATZ_INSUFFICIENT";
    case ErrorCode::non_delta_boundary: return "NON_DELTA_BOUNDARY";
    case ErrorCode::no_convergence: return "NO_CONVERGENCE";
    case ErrorCode::stencil_out_of_domain: return "STENCIL_OUT_OF_DOMAIN";
    case ErrorCode::parse_error: return "PARSE_ERROR";
    }
    return "UNKNOWN";
}

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw Error(ErrorCode::invalid_argument, "zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational make_rational(long num, long den) {
    return make_rational(Integer(num), Integer(den));
}

Rational rational_from_strings(const std::string& num, const std::string& den) {
    Integer n, d;
    if (n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0) {
        throw Error(ErrorCode::parse_error, "not a decimal integer: " + num + "/" + den);
    }
    return make_rational(n, d);
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) {
        return q.get_num().get_str();
    }
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer binomial(long n, long r) {
    if (n < 0) {
        throw Error(ErrorCode::invalid_argument, "binomial with negative n");
    }
    if (r < 0 || r > n) {
        return 0;
    }
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
    return out;
}

double to_double(const Rational& q) { return q.get_d(); }

long double to_long_double(const Rational& q) {
    const std::string num = q.get_num().get_str();
    const std::string den = q.get_den().get_str();
    return std::strtold(num.c_str(), nullptr) / std::strtold(den.c_str(), nullptr);
}

} // namespace biharm
