#ifndef MEANFORGE_KERNELS_HPP
#define MEANFORGE_KERNELS_HPP

#include "meanforge/means.hpp"
#include "meanforge/quadrature.hpp"

/// The representation densities: q, rho, Q_lambda, F, P and the
/// Stieltjes density of h_alpha.  Every quadrature-backed kernel
/// reports its own error estimate.
namespace meanforge::kernels {

struct KernelValue {
  double value = 0.0;
  double err_estimate = 0.0;
  long evals = 0;
  bool converged = true;
};

/// q(u) = sqrt(1/u-1) - 1/sqrt(1/u-1), evaluated in the algebraically
/// equivalent form (1-2u)/sqrt(u(1-u)) so that q(u) + q(1-u) vanishes
/// identically in floating point.
double q_weight(double u);

/// rho(s) = int_0^{1/2} q(u) [1 - e^{-(1-2u)s}] e^{-us} du  (first form).
KernelValue rho(double s, const quad::QuadConfig& cfg = {});

/// Second form of rho, int_0^{1/2} q(1/2-u)(e^{us}-e^{-us})e^{-s/2} du,
/// kept as an independent cross-check of the first.
KernelValue rho_alt(double s, const quad::QuadConfig& cfg = {});

/// F(lambda,s) = int_0^1 (1/u-1)^l (1 - l/(1-u)) e^{-us} du, split at
/// the sign change u = 1-lambda of the parenthesis.
KernelValue f_kernel(double lambda, double s, const quad::QuadConfig& cfg = {});

/// Q_l(u) = sin(l pi)/(l(1-l) pi) (1/u-1)^l (1 - l/(1-u)).
double q_lambda(double lambda, double u);

enum class PMode { direct, fast };

/// P_{x,y}(s) = int_0^1 sin(l pi) F(l,(x-y)s) dl.  The direct mode
/// nests quadratures (outer l, inner u); the fast mode integrates the
/// closed-form lambda integral
///   int_0^1 sin(pi l) c^l dl = pi(1+c)/(pi^2 + ln^2 c),  c = 1/u - 1,
/// and its d/d(ln c) companion for the l sin(pi l) c^l term, which after
/// v = ln c collapses to a single smooth integral
///   P = int_{-inf}^{inf} 2 pi v/(v^2+pi^2)^2 e^{-(x-y)s/(1+e^v)} dv.
KernelValue p_kernel(const means::MeanPair& m, double s,
                     const quad::QuadConfig& cfg = {},
                     PMode mode = PMode::fast);

/// Evaluates both modes; throws std::runtime_error when they disagree
/// by more than 1e-8, otherwise returns the fast value and reports the
/// observed gap inside err_estimate.
KernelValue p_kernel_checked(const means::MeanPair& m, double s,
                             const quad::QuadConfig& cfg = {});

/// Stieltjes density of h_alpha: (sin(alpha pi)/pi) (1/u-1)^alpha.
double h_density(double alpha, double u);

}  // namespace meanforge::kernels

#endif  // MEANFORGE_KERNELS_HPP
