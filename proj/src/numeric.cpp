#include "biharm/numeric.hpp"

#include "biharm/error.hpp"
#include "biharm/kernel_builder.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>
#include <type_traits>

namespace biharm {

namespace {

constexpr std::size_t kMaxNodes = std::size_t{1} << 20;
constexpr std::size_t kStartNodes = 256;

double wrapped_angle(double theta) {
    return std::remainder(theta, 2.0 * std::numbers::pi);
}

void require_radius(double r) {
    if (!(r >= 0.0 && r < 1.0)) {
        throw Error(ErrorCode::invalid_argument, "radius must lie in [0, 1), got " + std::to_string(r));
    }
}

void require_nodes(std::size_t n, std::size_t minimum) {
    if (n < minimum) {
        throw Error(ErrorCode::invalid_argument,
                    "quadrature needs at least " + std::to_string(minimum) + " nodes");
    }
}

double node_angle(std::size_t j, std::size_t n) {
    return 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
}

bool near_corner(double r, double theta) {
    return r > 0.999 && std::abs(wrapped_angle(theta)) < 1e-3;
}

} // namespace

std::optional<Precision> precision_from_env() {
    const char* raw = std::getenv("BIHARM_PRECISION");
    if (raw == nullptr || *raw == '\0') {
        return std::nullopt;
    }
    const std::string value(raw);
    if (value == "double") {
        return Precision::binary64;
    }
    if (value == "extended") {
        return Precision::extended;
    }
    throw Error(ErrorCode::invalid_argument, "BIHARM_PRECISION must be 'double' or 'extended', got '" + value + "'");
}

CompiledKernel::CompiledKernel(const KernelExpansion& u) : gamma_(u.gamma) {
    for (const auto& [beta, f] : u.terms) {
        for (const auto& [k, c] : f.terms()) {
            terms_.push_back({beta, k, to_double(c), to_long_double(c)});
        }
    }
}

template <typename Real>
Real CompiledKernel::sum(Real t, Real inv_dist2) const {
    Real total = 0;
    Real inv_pow = 1;
    int level = 0;
    for (const Term& term : terms_) {
        while (level < term.beta) {
            inv_pow *= inv_dist2;
            ++level;
        }
        const Real c = std::is_same_v<Real, long double> ? static_cast<Real>(term.coeff_ext)
                                                         : static_cast<Real>(term.coeff);
        total += c * std::pow(t, term.k) * inv_pow;
    }
    return total;
}

double CompiledKernel::eval_binary64(double r, double theta) const {
    const double s = std::sin(0.5 * theta);
    const double dist2 = (1.0 - r) * (1.0 - r) + 4.0 * r * s * s;
    return sum<double>((1.0 - r) * (1.0 + r), 1.0 / dist2);
}

long double CompiledKernel::eval_extended(long double r, long double theta) const {
    const long double s = std::sin(0.5L * theta);
    const long double dist2 = (1.0L - r) * (1.0L - r) + 4.0L * r * s * s;
    return sum<long double>((1.0L - r) * (1.0L + r), 1.0L / dist2);
}

long double CompiledKernel::eval_cartesian(long double x, long double y) const {
    const long double dist2 = (1.0L - x) * (1.0L - x) + y * y;
    return sum<long double>(1.0L - x * x - y * y, 1.0L / dist2);
}

double CompiledKernel::eval(DiscPoint p, Precision precision) const {
    require_radius(p.r);
    if (precision == Precision::automatic) {
        if (const auto forced = precision_from_env()) {
            precision = *forced;
        } else {
            precision = near_corner(p.r, p.theta) ? Precision::extended : Precision::binary64;
        }
    }
    if (precision == Precision::extended) {
        return static_cast<double>(eval_extended(p.r, p.theta));
    }
    return eval_binary64(p.r, p.theta);
}

double eval(const KernelExpansion& kernel, DiscPoint p, Precision precision) {
    return CompiledKernel(kernel).eval(p, precision);
}

namespace {

// Per-node precision for the quadrature sums, same rule as eval().
class NodeEvaluator {
public:
    NodeEvaluator(const CompiledKernel& kernel, double r) : kernel_(kernel), r_(r), forced_(precision_from_env()) {}

    double operator()(double theta) const {
        const bool extended = forced_ ? *forced_ == Precision::extended : near_corner(r_, theta);
        return extended ? static_cast<double>(kernel_.eval_extended(r_, theta)) : kernel_.eval_binary64(r_, theta);
    }

private:
    const CompiledKernel& kernel_;
    double r_;
    std::optional<Precision> forced_;
};

} // namespace

namespace serial {

double integral_mean(const CompiledKernel& kernel, double r, std::size_t n) {
    require_radius(r);
    require_nodes(n, 64);
    const NodeEvaluator value(kernel, r);
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        acc += value(node_angle(j, n));
    }
    return acc / static_cast<double>(n);
}

double abs_mean(const CompiledKernel& kernel, double r, std::size_t n) {
    require_radius(r);
    require_nodes(n, 64);
    const NodeEvaluator value(kernel, r);
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        acc += std::abs(value(node_angle(j, n)));
    }
    return acc / static_cast<double>(n);
}

std::vector<double> cosine_coefficients(const CompiledKernel& kernel, double r, int max_m, std::size_t n) {
    require_radius(r);
    require_nodes(n, 64);
    const NodeEvaluator value(kernel, r);
    std::vector<double> out(static_cast<std::size_t>(max_m) + 1, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        const double phi = node_angle(j, n);
        const double v = value(phi);
        for (int m = 0; m <= max_m; ++m) {
            out[m] += v * std::cos(m * phi);
        }
    }
    for (double& c : out) {
        c /= static_cast<double>(n);
    }
    return out;
}

} // namespace serial

double integral_mean(const CompiledKernel& kernel, double r, std::size_t n) {
    require_radius(r);
    require_nodes(n, 64);
    const NodeEvaluator value(kernel, r);
    const auto count = static_cast<long long>(n);
    double acc = 0.0;
#pragma omp parallel for reduction(+ : acc) schedule(static)
    for (long long j = 0; j < count; ++j) {
        acc += value(node_angle(static_cast<std::size_t>(j), n));
    }
    return acc / static_cast<double>(n);
}

double abs_mean(const CompiledKernel& kernel, double r, std::size_t n) {
    require_radius(r);
    require_nodes(n, 64);
    const NodeEvaluator value(kernel, r);
    const auto count = static_cast<long long>(n);
    double acc = 0.0;
#pragma omp parallel for reduction(+ : acc) schedule(static)
    for (long long j = 0; j < count; ++j) {
        acc += std::abs(value(node_angle(static_cast<std::size_t>(j), n)));
    }
    return acc / static_cast<double>(n);
}

std::vector<double> cosine_coefficients(const CompiledKernel& kernel, double r, int max_m, std::size_t n) {
    require_radius(r);
    require_nodes(n, 64);
    const NodeEvaluator value(kernel, r);
    const auto modes = static_cast<std::size_t>(max_m) + 1;
    const auto count = static_cast<long long>(n);
    std::vector<double> out(modes, 0.0);
#pragma omp parallel
    {
        std::vector<double> local(modes, 0.0);
#pragma omp for schedule(static) nowait
        for (long long j = 0; j < count; ++j) {
            const double phi = node_angle(static_cast<std::size_t>(j), n);
            const double v = value(phi);
            for (std::size_t m = 0; m < modes; ++m) {
                local[m] += v * std::cos(static_cast<double>(m) * phi);
            }
        }
#pragma omp critical
        for (std::size_t m = 0; m < modes; ++m) {
            out[m] += local[m];
        }
    }
    for (double& c : out) {
        c /= static_cast<double>(n);
    }
    return out;
}

namespace {

template <typename Rule>
QuadratureResult doubling(Rule rule, double rel_tol, const char* what) {
    std::size_t n = kStartNodes;
    double previous = rule(n);
    while (n < kMaxNodes) {
        n *= 2;
        const double current = rule(n);
        if (std::abs(current - previous) <= rel_tol * std::abs(current)) {
            return {current, n};
        }
        previous = current;
    }
    throw Error(ErrorCode::no_convergence, std::string(what) + " did not settle within 2^20 nodes");
}

} // namespace

QuadratureResult adaptive_integral_mean(const CompiledKernel& kernel, double r, double rel_tol) {
    return doubling([&](std::size_t n) { return integral_mean(kernel, r, n); }, rel_tol, "integral mean");
}

QuadratureResult l1_norm(const CompiledKernel& kernel, double r) {
    return doubling([&](std::size_t n) { return abs_mean(kernel, r, n); }, 1e-6, "L1 norm");
}

double TrigPoly::operator()(double theta) const {
    double v = 0.0;
    for (std::size_t m = 0; m < cos_coeffs.size(); ++m) {
        v += cos_coeffs[m] * std::cos(static_cast<double>(m) * theta);
    }
    for (std::size_t m = 0; m < sin_coeffs.size(); ++m) {
        v += sin_coeffs[m] * std::sin(static_cast<double>(m) * theta);
    }
    return v;
}

int TrigPoly::degree() const {
    return static_cast<int>(std::max(cos_coeffs.size(), sin_coeffs.size())) - 1;
}

DirichletSolver::DirichletSolver(int gamma)
    : DirichletSolver(build({gamma, KernelKind::F}), build({gamma, KernelKind::H})) {}

DirichletSolver::DirichletSolver(const KernelExpansion& f_kernel, const KernelExpansion& h_kernel)
    : f_(f_kernel), h_(h_kernel) {}

std::vector<double> DirichletSolver::modes(const CompiledKernel& k, double r, int max_m) const {
    std::size_t n = kStartNodes;
    std::vector<double> previous = cosine_coefficients(k, r, max_m, n);
    while (n < kMaxNodes) {
        n *= 2;
        std::vector<double> current = cosine_coefficients(k, r, max_m, n);
        double diff = 0.0, scale = 1.0;
        for (std::size_t m = 0; m < current.size(); ++m) {
            diff = std::max(diff, std::abs(current[m] - previous[m]));
            scale = std::max(scale, std::abs(current[m]));
        }
        if (diff <= 1e-11 * scale) {
            return current;
        }
        previous = std::move(current);
    }
    throw Error(ErrorCode::no_convergence, "kernel Fourier modes did not settle within 2^20 nodes");
}

namespace {

double combine_modes(const std::vector<double>& fm, const std::vector<double>& hm, const TrigPoly& f0,
                     const TrigPoly& f1, double theta) {
    const auto coeff = [](const std::vector<double>& v, std::size_t m) { return m < v.size() ? v[m] : 0.0; };
    double u = 0.0;
    for (std::size_t m = 0; m < fm.size(); ++m) {
        const double c = std::cos(static_cast<double>(m) * theta);
        const double s = std::sin(static_cast<double>(m) * theta);
        u += fm[m] * (coeff(f0.cos_coeffs, m) * c + coeff(f0.sin_coeffs, m) * s);
        u += hm[m] * (coeff(f1.cos_coeffs, m) * c + coeff(f1.sin_coeffs, m) * s);
    }
    return u;
}

} // namespace

std::vector<double> DirichletSolver::profile(const TrigPoly& f0, const TrigPoly& f1, double r, std::size_t n) const {
    require_radius(r);
    const int max_m = std::max({f0.degree(), f1.degree(), 0});
    const std::vector<double> fm = modes(f_, r, max_m);
    const std::vector<double> hm = modes(h_, r, max_m);
    std::vector<double> out(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        out[j] = combine_modes(fm, hm, f0, f1, node_angle(j, n));
    }
    return out;
}

double DirichletSolver::operator()(const TrigPoly& f0, const TrigPoly& f1, DiscPoint p) const {
    require_radius(p.r);
    const int max_m = std::max({f0.degree(), f1.degree(), 0});
    return combine_modes(modes(f_, p.r, max_m), modes(h_, p.r, max_m), f0, f1, p.theta);
}

double solve_dirichlet(int gamma, const TrigPoly& f0, const TrigPoly& f1, DiscPoint p) {
    return DirichletSolver(gamma)(f0, f1, p);
}

double fd_biharmonic_residual(const CompiledKernel& kernel, DiscPoint p, double h) {
    if (!(h > 0.0)) {
        throw Error(ErrorCode::invalid_argument, "step must be positive");
    }
    const long double x0 = p.r * std::cos(static_cast<long double>(p.theta));
    const long double y0 = p.r * std::sin(static_cast<long double>(p.theta));
    const long double step = h;
    const long double dist_to_one = std::hypot(1.0L - x0, y0);
    if (p.r + 2.0L * step >= 1.0L || dist_to_one - 2.0L * step <= 2.0L * step) {
        throw Error(ErrorCode::stencil_out_of_domain,
                    "stencil of half-width 2h leaves the disc or approaches z = 1");
    }

    const long double inv4h2 = 1.0L / (4.0L * step * step);
    const int gamma = kernel.gamma();
    const auto weighted_laplacian = [&](long double x, long double y) {
        const long double lap = (kernel.eval_cartesian(x + step, y) + kernel.eval_cartesian(x - step, y) +
                                 kernel.eval_cartesian(x, y + step) + kernel.eval_cartesian(x, y - step) -
                                 4.0L * kernel.eval_cartesian(x, y)) *
                                inv4h2;
        return lap / std::pow(1.0L - x * x - y * y, gamma);
    };

    const long double c = weighted_laplacian(x0, y0);
    const long double e = weighted_laplacian(x0 + step, y0);
    const long double w = weighted_laplacian(x0 - step, y0);
    const long double n = weighted_laplacian(x0, y0 + step);
    const long double s = weighted_laplacian(x0, y0 - step);
    const long double residual = (e + w + n + s - 4.0L * c) * inv4h2;
    const long double scale = std::max(1.0L, (std::abs(c) + std::abs(e) + std::abs(w) + std::abs(n) + std::abs(s)) / 5.0L);
    return static_cast<double>(residual / scale);
}

} // namespace biharm
