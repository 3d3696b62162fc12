// biharm: build, verify and evaluate the Poisson kernels F_gamma and H_gamma
// of the weighted biharmonic Dirichlet problem in the unit disc.
//
// Exit codes: 0 success, 1 mathematical failure, 2 usage error.

#include "biharm/boundary.hpp"
#include "biharm/conjecture.hpp"
#include "biharm/error.hpp"
#include "biharm/kernel_io.hpp"
#include "biharm/numeric.hpp"
#include "biharm/operators.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct KernelArgs {
    int gamma = 0;
    std::string kind = "F";
};

void add_kernel_options(CLI::App* cmd, KernelArgs& args) {
    cmd->add_option("--gamma", args.gamma, "Weight exponent gamma >= 0")->required()->check(CLI::NonNegativeNumber);
    cmd->add_option("--kernel", args.kind, "Kernel kind")->required()->check(CLI::IsMember({"F", "H"}));
}

biharm::KernelExpansion build_kernel(const KernelArgs& args) {
    return biharm::build({args.gamma, biharm::kernel_kind_from_string(args.kind)});
}

int run_gen(const KernelArgs& args, const std::string& format) {
    const biharm::KernelKind kind = biharm::kernel_kind_from_string(args.kind);
    const biharm::KernelExpansion u = build_kernel(args);
    if (format == "latex") {
        std::cout << biharm::to_latex(u, kind);
    } else if (format == "text") {
        std::cout << biharm::to_text(u, kind) << '\n';
    } else {
        biharm::KernelDocument doc{kind, u, {}};
        if (biharm::is_zero(biharm::biharmonic(u))) {
            doc.provenance.checks_passed.push_back("biharmonic");
        }
        const biharm::BoundaryData expected =
            kind == biharm::KernelKind::F ? biharm::BoundaryData{1, 0} : biharm::BoundaryData{0, 1};
        if (biharm::expansion_boundary(u) == expected) {
            doc.provenance.checks_passed.push_back("boundary");
        }
        if (biharm::conjectured_kernel(args.gamma, kind) == u) {
            doc.provenance.checks_passed.push_back("closed_form");
        }
        std::cout << biharm::to_json(doc).dump(2) << '\n';
    }
    return 0;
}

int run_verify(int gamma_max, int jobs, bool deep) {
    const auto verdicts = biharm::verify_sweep(gamma_max, jobs, deep);
    int failed = 0;
    for (const auto& v : verdicts) {
        std::cout << biharm::report_lines(v);
        failed += (v.f.passed() ? 0 : 1) + (v.h.passed() ? 0 : 1);
    }
    std::cout << "summary kernels=" << 2 * verdicts.size() << " failed=" << failed << '\n';
    return failed == 0 ? 0 : kExitFailure;
}

int run_eval(const KernelArgs& args, double r, double theta) {
    const biharm::CompiledKernel k(build_kernel(args));
    std::printf("%.17g\n", k.eval({r, theta}));
    return 0;
}

int run_l1check(const KernelArgs& args, const std::vector<double>& grid) {
    const biharm::CompiledKernel k(build_kernel(args));
    std::cout << "r\tl1\tl1_over_1_minus_r\tnodes\n";
    for (double r : grid) {
        const biharm::QuadratureResult q = biharm::l1_norm(k, r);
        std::printf("%.6g\t%.10f\t%.10f\t%zu\n", r, q.value, q.value / (1.0 - r), q.nodes);
    }
    return 0;
}

int run_means(const KernelArgs& args, const std::vector<double>& grid) {
    const biharm::KernelExpansion u = build_kernel(args);
    const biharm::CompiledKernel k(u);
    const biharm::BoundaryData bd = biharm::expansion_boundary(u);
    const double a = biharm::to_double(bd.a), b = biharm::to_double(bd.b);
    std::cout << "r\tquadrature_mean\texact_mean\tasymptotic\tdifference\tdifference_over_1_minus_r_sq\n";
    for (double r : grid) {
        const double mean = biharm::adaptive_integral_mean(k, r).value;
        const double exact = static_cast<double>(biharm::exact_integral_mean(u, r));
        const double asym = a + b * (1.0 - r);
        const double diff = mean - asym;
        std::printf("%.6g\t%.12f\t%.12f\t%.12f\t%.6e\t%.6f\n", r, mean, exact, asym, diff,
                    diff / ((1.0 - r) * (1.0 - r)));
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Poisson kernels of the weighted biharmonic operator in the unit disc"};
    app.require_subcommand(1);

    KernelArgs gen_args;
    std::string format = "text";
    auto* gen = app.add_subcommand("gen", "Build F_gamma or H_gamma and print it");
    add_kernel_options(gen, gen_args);
    gen->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "latex", "text"}));

    int gamma_max = 0;
    int jobs = 1;
    bool deep = false;
    auto* verify = app.add_subcommand("verify", "Check the closed forms against the builder for 0..gamma-max");
    verify->add_option("--gamma-max", gamma_max, "Largest gamma")->required()->check(CLI::NonNegativeNumber);
    verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    verify->add_flag("--deep", deep, "Also re-derive every monomial rule by direct composition");

    KernelArgs eval_args;
    double r = 0.0, theta = 0.0;
    auto* eval = app.add_subcommand("eval", "Evaluate a kernel at r e^{i theta}");
    add_kernel_options(eval, eval_args);
    eval->add_option("--r", r, "Radius in [0, 1)")->required()->check(CLI::Range(0.0, 1.0));
    eval->add_option("--theta", theta, "Angle in radians")->required();

    KernelArgs l1_args;
    std::vector<double> l1_grid;
    auto* l1 = app.add_subcommand("l1check", "Tabulate the L1 norm of the dilated kernel");
    add_kernel_options(l1, l1_args);
    l1->add_option("--r-grid", l1_grid, "Comma-separated radii")->required()->delimiter(',')->check(CLI::Range(0.0, 1.0));

    KernelArgs means_args;
    std::vector<double> means_grid;
    auto* means = app.add_subcommand("means", "Compare integral means with a + b (1 - r)");
    add_kernel_options(means, means_args);
    means->add_option("--r-grid", means_grid, "Comma-separated radii")
        ->required()
        ->delimiter(',')
        ->check(CLI::Range(0.0, 1.0));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*gen) {
            return run_gen(gen_args, format);
        }
        if (*verify) {
            return run_verify(gamma_max, jobs, deep);
        }
        if (*eval) {
            return run_eval(eval_args, r, theta);
        }
        if (*l1) {
            return run_l1check(l1_args, l1_grid);
        }
        if (*means) {
            return run_means(means_args, means_grid);
        }
    } catch (const biharm::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.code() == biharm::ErrorCode::invalid_argument ? kExitUsage : kExitFailure;
    }
    return kExitUsage;
}
