#include "biharm/error.hpp"
#include "biharm/kernel_io.hpp"

#include "fixtures/published_kernels.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <regex>
#include <sstream>

using namespace biharm;

namespace {

std::string read_golden(const std::string& name) {
    std::ifstream in(std::string(BIHARM_GOLDEN_DIR) + "/" + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Drops whitespace, braces around single-digit exponents and the sentence
// punctuation after the last row, none of which change the formula.
std::string normalize_latex(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            out += c;
        }
    }
    out = std::regex_replace(out, std::regex(R"(\^\{(\d)\})"), "^$1");
    out = std::regex_replace(out, std::regex(R"([.,](\\end\{align\*\}))"), "$1");
    return out;
}

} // namespace

TEST(Json, DocumentShape) {
    const KernelDocument doc{KernelKind::F, fixtures::F2(), {}};
    const nlohmann::json j = to_json(doc);
    EXPECT_EQ(j.at("gamma"), 2);
    EXPECT_EQ(j.at("kind"), "F");
    EXPECT_EQ(j.at("provenance").at("builder_version"), kBuilderVersion);
    const nlohmann::json& top = j.at("terms").back();
    EXPECT_EQ(top.at("beta"), 4);
    EXPECT_EQ(top.at("coeffs").at(0), (nlohmann::json{{"k", 7}, {"num", "1"}, {"den", "2"}}));
}

TEST(Json, RoundTripExact) {
    for (int gamma = 0; gamma <= 40; ++gamma) {
        for (KernelKind kind : {KernelKind::F, KernelKind::H}) {
            const KernelDocument doc{kind, build({gamma, kind}), {kBuilderVersion, {"biharmonic", "boundary"}}};
            const std::string text = to_json(doc).dump();
            ASSERT_EQ(document_from_json(nlohmann::json::parse(text)), doc) << gamma;
        }
    }
}

TEST(Json, SchemaViolationsAreParseErrors) {
    const auto expect_parse_error = [](const std::string& text) {
        try {
            document_from_json(nlohmann::json::parse(text));
            FAIL() << text;
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::parse_error) << text;
        }
    };
    const std::string prov = R"("provenance": {"builder_version": "1.0.0", "checks_passed": []})";
    expect_parse_error(R"({"kind": "F", "terms": [], )" + prov + "}");
    expect_parse_error(R"({"gamma": -1, "kind": "F", "terms": [], )" + prov + "}");
    expect_parse_error(R"({"gamma": 0, "kind": "Q", "terms": [], )" + prov + "}");
    expect_parse_error(R"({"gamma": 0, "kind": "F", "terms": [{"beta": 1, "coeffs": [{"k": 2, "num": "1", "den": "0"}]}], )" + prov + "}");
    expect_parse_error(R"({"gamma": 0, "kind": "F", "terms": [{"beta": 0, "coeffs": [{"k": 2, "num": "1", "den": "2"}]}], )" + prov + "}");
    expect_parse_error(R"({"gamma": 0, "kind": "F", "terms": [{"beta": 1, "coeffs": [{"k": 2, "num": "0", "den": "2"}]}], )" + prov + "}");
    expect_parse_error(R"({"gamma": 0, "kind": "F", "terms": []})");
}

TEST(Latex, GoldenTables) {
    const std::vector<std::pair<std::string, KernelSpec>> cases{
        {"F3.tex", {3, KernelKind::F}}, {"H3.tex", {3, KernelKind::H}}, {"F4.tex", {4, KernelKind::F}},
        {"H4.tex", {4, KernelKind::H}}, {"F5.tex", {5, KernelKind::F}}, {"H5.tex", {5, KernelKind::H}},
    };
    for (const auto& [file, spec] : cases) {
        const std::string golden = read_golden(file);
        ASSERT_FALSE(golden.empty()) << file;
        EXPECT_EQ(normalize_latex(to_latex(build(spec), spec.kind)), normalize_latex(golden)) << file;
    }
}

TEST(Latex, ExactLayout) {
    EXPECT_EQ(to_latex(fixtures::H3(), KernelKind::H),
              "\\begin{align*}\n"
              "2h_1(x)&=(1-x)^5,\\\\\n"
              "4h_2(x)&=3(1-x)^6-2(1-x)^5,\\\\\n"
              "6h_3(x)&=3(1-x)^7-2(1-x)^6,\\\\\n"
              "8h_4(x)&=(1-x)^8.\n"
              "\\end{align*}\n");
}

TEST(Latex, FractionsAndConstants) {
    KernelExpansion u;
    u.add_term(1, 0, make_rational(3, 8));
    u.add_term(1, 1, -1);
    EXPECT_EQ(to_latex(u, KernelKind::F), "\\begin{align*}\n2f_1(x)&=-2(1-x)+\\frac{3}{4}.\n\\end{align*}\n");
}

TEST(Text, ClassicalKernels) {
    EXPECT_EQ(to_text(fixtures::F0(), KernelKind::F), "F_0 = 1/2·t^2/|1-z|^2 + 1/2·t^3/|1-z|^4");
    EXPECT_EQ(to_text(fixtures::F1(), KernelKind::F),
              "F_1 = 1/2·t^3/|1-z|^2 + t^4/|1-z|^4 - t^3/|1-z|^4 + 1/2·t^5/|1-z|^6");
    EXPECT_EQ(to_text(KernelExpansion{}, KernelKind::H), "H_0 = 0");
}
