#include "biharm/kernel_io.hpp"

#include "biharm/error.hpp"

#include <sstream>

namespace biharm {

using nlohmann::json;

json to_json(const KernelDocument& doc) {
    json terms = json::array();
    for (const auto& [beta, f] : doc.expansion.terms) {
        json coeffs = json::array();
        for (const auto& [k, c] : f.terms()) {
            coeffs.push_back({{"k", k}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
        }
        terms.push_back({{"beta", beta}, {"coeffs", std::move(coeffs)}});
    }
    return {
        {"gamma", doc.expansion.gamma},
        {"kind", to_string(doc.kind)},
        {"terms", std::move(terms)},
        {"provenance",
         {{"builder_version", doc.provenance.builder_version}, {"checks_passed", doc.provenance.checks_passed}}},
    };
}

KernelDocument document_from_json(const json& j) {
    try {
        KernelDocument doc;
        doc.expansion.gamma = j.at("gamma").get<int>();
        if (doc.expansion.gamma < 0) {
            throw Error(ErrorCode::parse_error, "gamma must be >= 0");
        }
        doc.kind = kernel_kind_from_string(j.at("kind").get<std::string>());
        for (const auto& term : j.at("terms")) {
            const int beta = term.at("beta").get<int>();
            for (const auto& c : term.at("coeffs")) {
                const Rational q =
                    rational_from_strings(c.at("num").get<std::string>(), c.at("den").get<std::string>());
                if (q == 0) {
                    throw Error(ErrorCode::parse_error, "zero coefficient stored in document");
                }
                doc.expansion.add_term(beta, c.at("k").get<int>(), q);
            }
        }
        const json& prov = j.at("provenance");
        doc.provenance.builder_version = prov.at("builder_version").get<std::string>();
        doc.provenance.checks_passed = prov.at("checks_passed").get<std::vector<std::string>>();
        return doc;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::parse_error, e.what());
    } catch (const Error& e) {
        if (e.code() == ErrorCode::parse_error) {
            throw;
        }
        throw Error(ErrorCode::parse_error, e.what());
    }
}

namespace {

std::string latex_power(int k) {
    if (k == 0) {
        return "";
    }
    if (k == 1) {
        return "(1-x)";
    }
    const std::string e = std::to_string(k);
    return "(1-x)^" + (e.size() > 1 ? "{" + e + "}" : e);
}

std::string latex_magnitude(const Rational& mag, bool has_power) {
    if (mag == 1 && has_power) {
        return "";
    }
    if (mag.get_den() == 1) {
        return mag.get_num().get_str();
    }
    return "\\frac{" + mag.get_num().get_str() + "}{" + mag.get_den().get_str() + "}";
}

Rational normalizer(KernelKind kind, int beta) {
    return kind == KernelKind::F ? Rational(2) : Rational(2 * beta);
}

} // namespace

std::string to_latex(const KernelExpansion& u, KernelKind kind) {
    std::ostringstream os;
    os << "\\begin{align*}\n";
    std::size_t row = 0;
    for (const auto& [beta, f] : u.terms) {
        const Rational norm = normalizer(kind, beta);
        os << norm.get_num().get_str() << (kind == KernelKind::F ? "f_" : "h_") << beta << "(x)&=";
        bool first = true;
        for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
            const Rational c = norm * it->second;
            if (c < 0) {
                os << '-';
            } else if (!first) {
                os << '+';
            }
            first = false;
            const std::string power = latex_power(it->first);
            os << latex_magnitude(abs(c), !power.empty()) << power;
        }
        os << (++row == u.terms.size() ? "." : ",\\\\") << '\n';
    }
    os << "\\end{align*}\n";
    return os.str();
}

std::string to_text(const KernelExpansion& u, KernelKind kind) {
    std::ostringstream os;
    os << to_string(kind) << '_' << u.gamma << " =";
    bool first = true;
    for (const auto& [beta, f] : u.terms) {
        for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
            const Rational& c = it->second;
            if (first) {
                os << (c < 0 ? " -" : " ");
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            first = false;
            const Rational mag = abs(c);
            if (mag != 1) {
                os << to_string(mag) << "\u00b7";
            }
            os << "t^" << it->first << "/|1-z|^" << 2 * beta;
        }
    }
    if (first) {
        os << " 0";
    }
    return os.str();
}

} // namespace biharm
