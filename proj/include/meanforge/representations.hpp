#ifndef MEANFORGE_REPRESENTATIONS_HPP
#define MEANFORGE_REPRESENTATIONS_HPP

#include <array>
#include <complex>
#include <string>

#include "meanforge/kernels.hpp"
#include "meanforge/means.hpp"
#include "meanforge/quadrature.hpp"

/// Right-hand sides of the integral representations, evaluated
/// numerically and compared against their closed-form left-hand sides.
namespace meanforge::repr {

struct ResidualReport {
  std::string identity;
  std::string inputs;
  std::complex<double> lhs{};
  std::complex<double> rhs{};
  double abs_residual = 0.0;
  double rel_residual = 0.0;
  double rhs_err_estimate = 0.0;
  long evals = 0;
  bool converged = false;
};

/// h_a(z) = 1 + (sin(a pi)/pi) int_0^1 (1/u-1)^a du/(u+z) versus the
/// principal branch of (1+1/z)^a, for a in (-1,1)\{0}, z off (-inf,0].
ResidualReport h_alpha_repr(double alpha, const means::EvalPoint& z,
                            const quad::QuadConfig& cfg = {});

/// Weighted geometric mean representation via the F kernel.  Pairs are
/// normalized to x > y through the lambda-swap symmetry; complex z must
/// additionally satisfy Re z > -y so the integral converges.
ResidualReport weighted_geometric_repr(const means::WeightedPair& w,
                                       const means::EvalPoint& z,
                                       const quad::QuadConfig& cfg = {});

/// Weighted AM-GM gap: [l x + (1-l) y] - x^l y^{1-l} versus
/// (sin(l pi)/pi)(x-y) int_0^inf F(l,(x-y)s)/s e^{-sy} ds.
ResidualReport weighted_am_gm_diff(const means::WeightedPair& w,
                                   const quad::QuadConfig& cfg = {});

/// Logarithmic mean representation via the P kernel.
ResidualReport log_mean_repr(const means::MeanPair& m,
                             const means::EvalPoint& z,
                             const quad::QuadConfig& cfg = {});

/// A - L gap versus ((x-y)/pi) int_0^inf P(s)/s e^{-sy} ds.
ResidualReport a_l_diff(const means::MeanPair& m,
                        const quad::QuadConfig& cfg = {});

/// Plain geometric mean representation through the rho density.  The
/// prefactor is (x-y)/(2 pi); see the module notes on the rho / F
/// normalization.
ResidualReport geometric_repr_rho(const means::MeanPair& m,
                                  const means::EvalPoint& z,
                                  const quad::QuadConfig& cfg = {});

/// The three harmonic-mean identities: the shifted representation, the
/// closed A - H gap, and the H(s, y+s) form (which needs s_shift > 0).
std::array<ResidualReport, 3> harmonic_repr(const means::MeanPair& m,
                                            double s_shift,
                                            const quad::QuadConfig& cfg = {});

/// Multivariate G_n representation with segment integrals between
/// consecutive tuple entries; degenerate segments contribute zero.
ResidualReport gn_repr(const means::PositiveTuple& a,
                       const means::EvalPoint& z,
                       const quad::QuadConfig& cfg = {});

/// Identric mean of the shifted pair evaluated through the power form
/// (lhs) and through exp of the average of ln over [x+t, y+t] (rhs).
ResidualReport identric_closed(const means::MeanPair& m, double t,
                               const quad::QuadConfig& cfg = {});

/// L(x,y) = int_0^1 x^u y^{1-u} du against the closed form.
ResidualReport log_mean_integral_form(const means::MeanPair& m,
                                      const quad::QuadConfig& cfg = {});

}  // namespace meanforge::repr

#endif  // MEANFORGE_REPRESENTATIONS_HPP
