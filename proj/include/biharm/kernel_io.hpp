#pragma once

#include "biharm/kernel_builder.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace biharm {

inline constexpr const char* kBuilderVersion = "1.0.0";

struct Provenance {
    std::string builder_version = kBuilderVersion;
    std::vector<std::string> checks_passed;

    friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// Serializable kernel. Coefficients are written as exact decimal strings:
///
///   {"gamma": 2, "kind": "F",
///    "terms": [{"beta": 1, "coeffs": [{"k": 4, "num": "1", "den": "2"}]}, ...],
///    "provenance": {"builder_version": "1.0.0", "checks_passed": [...]}}
struct KernelDocument {
    KernelKind kind = KernelKind::F;
    KernelExpansion expansion;
    Provenance provenance;

    friend bool operator==(const KernelDocument&, const KernelDocument&) = default;
};

nlohmann::json to_json(const KernelDocument& doc);
/// Throws Error(parse_error) on schema violations.
KernelDocument document_from_json(const nlohmann::json& j);

/// One align* row per beta, normalized as 2 f_b (F) or 2b h_b (H), with
/// (1-x)^k terms in descending k:
///
///   \begin{align*}
///   2f_1(x)&=(1-x)^5, (row break)
///   ...
///   2f_5(x)&=(1-x)^9.
///   \end{align*}
std::string to_latex(const KernelExpansion& u, KernelKind kind);

/// "F_0 = 1/2·t^2/|1-z|^2 + 1/2·t^3/|1-z|^4" with t = 1 - |z|^2; ascending
/// beta, descending k within each beta.
std::string to_text(const KernelExpansion& u, KernelKind kind);

} // namespace biharm
