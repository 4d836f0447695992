#include "meanforge/contour.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "meanforge/complex_ops.hpp"

namespace meanforge::contour {

namespace {

constexpr double kPi = 3.14159265358979323846;

using std::complex;

complex<double> h_alpha(double alpha, complex<double> w) {
  return principal_pow(1.0 + 1.0 / w, alpha);
}

double cut_distance(complex<double> z) {
  // distance from z to the ray (-inf, 0]
  if (z.real() <= 0.0) return std::abs(z.imag());
  return std::abs(z);
}

}  // namespace

double boundary_imag_closed(double alpha, double t) {
  if (!(t > 0.0)) throw std::domain_error("boundary value needs t > 0");
  if (t >= 1.0) return 0.0;
  return -std::pow(1.0 / t - 1.0, alpha) * std::sin(alpha * kPi);
}

double boundary_imag_numeric(double alpha, double t, double epsilon) {
  if (!(t > 0.0)) throw std::domain_error("boundary value needs t > 0");
  if (!(epsilon > 0.0)) throw std::domain_error("epsilon must be positive");
  return h_alpha(alpha, complex<double>(-t, epsilon)).imag();
}

ContourReport cauchy_contour_eval(double alpha, complex<double> z,
                                  const ContourSpec& spec,
                                  const quad::QuadConfig& cfg) {
  const double eps = spec.epsilon;
  const double r = spec.r;
  if (!(eps > 0.0 && eps < 1.0 && r > 1.0)) {
    throw std::domain_error("contour requires 0 < epsilon < 1 < r");
  }
  if (!(eps < std::abs(z) && std::abs(z) < r)) {
    throw std::domain_error("target z must satisfy epsilon < |z| < r");
  }
  if (!(cut_distance(z) > 10.0 * eps)) {
    throw std::domain_error("target z is too close to the contour");
  }

  const complex<double> i_unit{0.0, 1.0};
  quad::QuadConfig sub = cfg;
  sub.abs_tol = cfg.abs_tol / 8.0;

  long evals = 0;
  bool ok = true;
  double err = 0.0;
  auto track = [&](const quad::ComplexIntegralResult& rr) {
    evals += rr.evals;
    ok = ok && rr.converged;
    err += rr.err_estimate;
    return rr.value;
  };

  // small half circle w = eps e^{i th}, th from pi/2 down to -pi/2
  auto small_f = [&](double th) -> complex<double> {
    const complex<double> w = eps * std::exp(i_unit * th);
    return i_unit * w * h_alpha(alpha, w) / (w - z);
  };
  const complex<double> small_arc =
      -track(quad::integrate_finite(small_f, -kPi / 2.0, kPi / 2.0, {}, sub));

  // horizontal edges w = x +- i eps, x from -R to 0 (upper) and back
  // (lower); split at the h_alpha zero w = -1 and near the origin so
  // the eps-scale features sit at panel endpoints
  const double big_r = std::sqrt(r * r - eps * eps);
  complex<double> segments{};
  {
    std::vector<double> cuts{-big_r, -2.0, -1.0, -0.5, 0.0};
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      if (!(cuts[i] < cuts[i + 1])) continue;
      auto upper = [&](double x) -> complex<double> {
        const complex<double> w(x, eps);
        return h_alpha(alpha, w) / (w - z);
      };
      auto lower = [&](double x) -> complex<double> {
        const complex<double> w(x, -eps);
        return h_alpha(alpha, w) / (w - z);
      };
      segments += track(
          quad::integrate_finite(upper, cuts[i], cuts[i + 1], {}, sub));
      segments -= track(
          quad::integrate_finite(lower, cuts[i], cuts[i + 1], {}, sub));
    }
  }

  // large arc from arg(-R - i eps) counterclockwise to arg(-R + i eps)
  const double th1 = kPi - std::atan2(eps, big_r);
  auto large_f = [&](double th) -> complex<double> {
    const complex<double> w = r * std::exp(i_unit * th);
    return i_unit * w * h_alpha(alpha, w) / (w - z);
  };
  const complex<double> large_arc =
      track(quad::integrate_finite(large_f, -th1, th1, {}, sub));

  ContourPieces pieces;
  pieces.small_arc = small_arc;
  pieces.segments = segments;
  pieces.large_arc = large_arc;
  pieces.total =
      (small_arc + segments + large_arc) / (2.0 * kPi * i_unit);

  char in[128];
  std::snprintf(in, sizeof(in), "alpha=%.10g;z=%.10g,%.10g;eps=%.3g;r=%.3g",
                alpha, z.real(), z.imag(), eps, r);
  ContourReport rep;
  rep.pieces = pieces;

  const complex<double> lhs = h_alpha(alpha, z);
  repr::ResidualReport& rr = rep.report;
  rr.identity = "contour";
  rr.inputs = in;
  rr.lhs = lhs;
  rr.rhs = pieces.total;
  rr.abs_residual = std::abs(lhs - pieces.total);
  rr.rel_residual = rr.abs_residual / std::max(std::abs(lhs), 1e-300);
  rr.rhs_err_estimate = err / (2.0 * kPi);
  rr.evals = evals;
  rr.converged = ok;
  return rep;
}

}  // namespace meanforge::contour
