#ifndef MEANFORGE_CONTOUR_HPP
#define MEANFORGE_CONTOUR_HPP

#include <complex>

#include "meanforge/quadrature.hpp"
#include "meanforge/representations.hpp"

/// Numerical verification of the complex-analytic machinery behind the
/// h_alpha representation: boundary values along the cut, and the full
/// Cauchy reconstruction of h_alpha(z) over the keyhole contour
/// C(epsilon, r) around (-inf, 0].
namespace meanforge::contour {

struct ContourSpec {
  double epsilon = 1e-3;
  double r = 1e3;
};

/// lim Im h_alpha(-t + i eps) as eps -> 0+:
/// 0 for t >= 1, -(1/t-1)^alpha sin(alpha pi) for 0 < t < 1.
double boundary_imag_closed(double alpha, double t);

/// Im of the principal (1 + 1/(-t + i eps))^alpha at finite eps.
double boundary_imag_numeric(double alpha, double t, double epsilon);

struct ContourPieces {
  std::complex<double> small_arc{};
  std::complex<double> segments{};  // both horizontal cut edges combined
  std::complex<double> large_arc{};
  std::complex<double> total{};  // (sum of pieces) / (2 pi i)
};

struct ContourReport {
  repr::ResidualReport report;
  ContourPieces pieces;
};

/// Integrates h_alpha(w)/(w-z) over the four contour pieces and
/// compares (1/2 pi i) of the sum with the direct principal-branch
/// value.  Requires epsilon < |z| < r with z at distance > 10 epsilon
/// from the cut.
ContourReport cauchy_contour_eval(double alpha, std::complex<double> z,
                                  const ContourSpec& spec,
                                  const quad::QuadConfig& cfg = {});

}  // namespace meanforge::contour

#endif  // MEANFORGE_CONTOUR_HPP
