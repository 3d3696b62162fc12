#pragma once

#include "biharm/expansion.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace biharm {

/// z = r e^{i theta} in the unit disc.
struct DiscPoint {
    double r = 0.0;
    double theta = 0.0;
};

enum class Precision {
    automatic, ///< double, switching to extended near z = 1 (r > 0.999, |theta| < 1e-3)
    binary64,
    extended,
};

/// Reads BIHARM_PRECISION ("double" or "extended"); empty when unset.
/// Throws Error(invalid_argument) on any other value.
std::optional<Precision> precision_from_env();

/// Floating-point image of a kernel expansion, ready for repeated evaluation.
/// |1 - z|^2 is formed as (1 - r)^2 + 4 r sin^2(theta / 2), which stays
/// accurate next to the boundary singularity.
class CompiledKernel {
public:
    explicit CompiledKernel(const KernelExpansion& u);

    int gamma() const noexcept { return gamma_; }

    /// Evaluation with the requested precision; automatic honours
    /// BIHARM_PRECISION when it is set.
    double eval(DiscPoint p, Precision precision = Precision::automatic) const;

    double eval_binary64(double r, double theta) const;
    long double eval_extended(long double r, long double theta) const;
    /// Same function at z = x + i y (used by the finite-difference check).
    long double eval_cartesian(long double x, long double y) const;

private:
    struct Term {
        int beta;
        int k;
        double coeff;
        long double coeff_ext;
    };

    template <typename Real>
    Real sum(Real t, Real inv_dist2) const;

    int gamma_;
    std::vector<Term> terms_; // ascending beta
};

double eval(const KernelExpansion& kernel, DiscPoint p, Precision precision = Precision::automatic);

/// Trapezoid approximation of (1/2pi) int u(r e^{i theta}) d theta on n
/// equispaced nodes (n >= 64). Spectrally accurate for these smooth periodic
/// integrands; near r = 1 the peak needs n well above 1 / (1 - r).
double integral_mean(const CompiledKernel& kernel, double r, std::size_t n);

/// Trapezoid mean of |u|.
double abs_mean(const CompiledKernel& kernel, double r, std::size_t n);

/// (1/2pi) int u(r e^{i phi}) cos(m phi) d phi for m = 0..max_m.
std::vector<double> cosine_coefficients(const CompiledKernel& kernel, double r, int max_m, std::size_t n);

/// Single-threaded references for the OpenMP kernels above.
namespace serial {
double integral_mean(const CompiledKernel& kernel, double r, std::size_t n);
double abs_mean(const CompiledKernel& kernel, double r, std::size_t n);
std::vector<double> cosine_coefficients(const CompiledKernel& kernel, double r, int max_m, std::size_t n);
} // namespace serial

struct QuadratureResult {
    double value;
    std::size_t nodes;
};

/// Integral mean with node doubling from 256 until two successive values
/// agree to rel_tol. Throws Error(no_convergence) past 2^20 nodes.
QuadratureResult adaptive_integral_mean(const CompiledKernel& kernel, double r, double rel_tol = 1e-12);

/// (1/2pi) int |u(r e^{i theta})| d theta with node doubling from 256 until
/// successive estimates agree to 1e-6 relative. Throws Error(no_convergence)
/// past 2^20 nodes.
QuadratureResult l1_norm(const CompiledKernel& kernel, double r);

/// f(theta) = sum_m cos_coeffs[m] cos(m theta) + sin_coeffs[m] sin(m theta).
struct TrigPoly {
    std::vector<double> cos_coeffs;
    std::vector<double> sin_coeffs;

    double operator()(double theta) const;
    int degree() const;
};

/// Solves the weighted biharmonic Dirichlet problem with trigonometric
/// polynomial data through u = F_r * f0 + H_r * f1. The kernels are even in
/// theta, so each convolution reduces to scaling Fourier modes by the
/// kernel's cosine coefficients.
class DirichletSolver {
public:
    explicit DirichletSolver(int gamma);
    DirichletSolver(const KernelExpansion& f_kernel, const KernelExpansion& h_kernel);

    double operator()(const TrigPoly& f0, const TrigPoly& f1, DiscPoint p) const;

    /// u on n equispaced angles at radius r.
    std::vector<double> profile(const TrigPoly& f0, const TrigPoly& f1, double r, std::size_t n) const;

private:
    std::vector<double> modes(const CompiledKernel& k, double r, int max_m) const;

    CompiledKernel f_;
    CompiledKernel h_;
};

double solve_dirichlet(int gamma, const TrigPoly& f0, const TrigPoly& f1, DiscPoint p);

/// Finite-difference estimate of Delta(w^-1 Delta u) at p, Delta = d^2/dz dz-bar,
/// from two nested 5-point Laplacians (13 distinct nodes, extended precision).
/// The value is divided by max(1, mean |w^-1 Delta_h u| over the outer
/// stencil) so it is comparable across kernels. Throws
/// Error(stencil_out_of_domain) if any node leaves r < 1 or comes within 2h
/// of z = 1.
double fd_biharmonic_residual(const CompiledKernel& kernel, DiscPoint p, double h);

} // namespace biharm
