#include "meanforge/kernels.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace meanforge::kernels {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_open_unit(double u, const char* what) {
  if (!(u > 0.0 && u < 1.0)) {
    std::ostringstream os;
    os << what << " requires u in (0,1), got u = " << u;
    throw std::domain_error(os.str());
  }
}

KernelValue from_result(const quad::IntegralResult& r) {
  KernelValue k;
  k.value = r.value;
  k.err_estimate = r.err_estimate;
  k.evals = r.evals;
  k.converged = r.converged;
  return k;
}

KernelValue combine(const quad::IntegralResult& a,
                    const quad::IntegralResult& b) {
  KernelValue k;
  k.value = a.value + b.value;
  k.err_estimate = a.err_estimate + b.err_estimate;
  k.evals = a.evals + b.evals;
  k.converged = a.converged && b.converged;
  return k;
}

}  // namespace

double q_weight(double u) {
  require_open_unit(u, "q_weight");
  return (1.0 - 2.0 * u) / std::sqrt(u * (1.0 - u));
}

KernelValue rho(double s, const quad::QuadConfig& cfg) {
  if (!(s > 0.0)) throw std::domain_error("rho requires s > 0");
  // q(u) ~ u^{-1/2} at the left end; the bracket goes through expm1 so
  // the value keeps relative accuracy down to s -> 0
  auto f = [s](double u) {
    return q_weight(u) * (-std::expm1(-(1.0 - 2.0 * u) * s)) *
           std::exp(-u * s);
  };
  quad::SingularityHint hint;
  hint.left_exponent = -0.5;
  return from_result(quad::integrate_finite(f, 0.0, 0.5, hint, cfg));
}

KernelValue rho_alt(double s, const quad::QuadConfig& cfg) {
  if (!(s > 0.0)) throw std::domain_error("rho_alt requires s > 0");
  // written in w = 1/2 - u so the u = 1/2 singular end sits at w = 0
  auto f = [s](double w) {
    return q_weight(w) * (std::exp((0.5 - w) * s) - std::exp(-(0.5 - w) * s)) *
           std::exp(-0.5 * s);
  };
  quad::SingularityHint hint;
  hint.left_exponent = -0.5;
  return from_result(quad::integrate_finite(f, 0.0, 0.5, hint, cfg));
}

KernelValue f_kernel(double lambda, double s, const quad::QuadConfig& cfg) {
  if (!(lambda > 0.0 && lambda < 1.0)) {
    throw std::domain_error("f_kernel requires lambda in (0,1)");
  }
  if (!(s >= 0.0)) throw std::domain_error("f_kernel requires s >= 0");

  // Below kFloor the integrand is replaced by its analytic head, whose
  // integral is added back in closed form: this keeps lambda/w away from
  // overflow at denormal arguments while losing no mass.
  constexpr double kFloor = 1e-280;
  const double ln_floor = -std::log(kFloor);

  quad::QuadConfig sub = cfg;
  sub.abs_tol = 0.5 * cfg.abs_tol;
  sub.max_evals = cfg.max_evals / 2;

  // int_0^d u^{-l}(1-l) du  and  e^{-s} int_0^d (w^l - l w^{l-1}) dw
  const double tail_left = std::pow(kFloor, 1.0 - lambda);
  const double tail_right =
      std::exp(-s) * (std::pow(kFloor, lambda + 1.0) / (lambda + 1.0) -
                      std::pow(kFloor, lambda));

  // When the integrable exponent p = 1+e drops below 0.04 the power
  // substitution maps the floor to an O(1) step inside the transformed
  // domain, so those pieces go through u = e^{-tau} instead, which keeps
  // the integrand smooth all the way down to the floor.
  const double p_left = 1.0 - lambda;
  quad::IntegralResult left_part;
  if (p_left >= 0.04) {
    auto left = [lambda, s](double u) {
      if (u < kFloor) return 0.0;
      return std::pow(1.0 / u - 1.0, lambda) * (1.0 - lambda / (1.0 - u)) *
             std::exp(-u * s);
    };
    quad::SingularityHint hl;
    hl.left_exponent = -lambda;
    left_part = quad::integrate_finite(left, 0.0, 1.0 - lambda, hl, sub);
  } else {
    auto left_tau = [lambda, s, p_left](double tau) {
      const double u = std::exp(-tau);
      return std::exp(-p_left * tau) * std::pow(1.0 - u, lambda) *
             (1.0 - lambda / (1.0 - u)) * std::exp(-u * s);
    };
    left_part = quad::integrate_finite(left_tau, -std::log(p_left),
                                       ln_floor, {}, sub);
  }

  const double p_right = lambda;
  quad::IntegralResult right_part;
  if (p_right >= 0.04) {
    // right piece rewritten in w = 1-u on (0, lambda): the
    // (1-u)^{lambda-1} singularity becomes w^{lambda-1} at an
    // exact-offset endpoint
    auto right = [lambda, s](double w) {
      if (w < kFloor) return 0.0;
      return std::pow(w / (1.0 - w), lambda) * (1.0 - lambda / w) *
             std::exp(-(1.0 - w) * s);
    };
    quad::SingularityHint hr;
    hr.left_exponent = lambda - 1.0;
    right_part = quad::integrate_finite(right, 0.0, lambda, hr, sub);
  } else {
    auto right_tau = [lambda, s](double tau) {
      const double w = std::exp(-tau);
      return std::exp(-(1.0 + lambda) * tau) *
             std::pow(1.0 - w, -lambda) * (1.0 - lambda * std::exp(tau)) *
             std::exp(-(1.0 - w) * s);
    };
    right_part = quad::integrate_finite(right_tau, -std::log(lambda),
                                        ln_floor, {}, sub);
  }

  KernelValue k = combine(left_part, right_part);
  k.value += tail_left + tail_right;
  return k;
}

double q_lambda(double lambda, double u) {
  if (!(lambda > 0.0 && lambda < 1.0)) {
    throw std::domain_error("q_lambda requires lambda in (0,1)");
  }
  require_open_unit(u, "q_lambda");
  return std::sin(lambda * kPi) / (lambda * (1.0 - lambda) * kPi) *
         std::pow(1.0 / u - 1.0, lambda) * (1.0 - lambda / (1.0 - u));
}

namespace {

KernelValue p_sigma_fast(double sigma, const quad::QuadConfig& cfg) {
  // P(sigma) = int_0^inf 2 pi V/(V^2+pi^2)^2 cosh(w)
  //            * e^{-sigma u}(1 - e^{-sigma(1-2u)}) dw,
  // V = sinh(w), u = 1/(1+e^V) < 1/2.  Pairing the +-v contributions of
  // the lambda-closed-form integrand makes the kernel positive, and
  // v = sinh(w) turns its 1/v^3 tail into e^{-2w} decay.
  auto f = [sigma](double w) {
    const double v = std::sinh(w);
    const double ev = std::exp(-v);
    const double u = ev / (1.0 + ev);
    const double den = v * v + kPi * kPi;
    const double kern = 2.0 * kPi * v / (den * den) * std::cosh(w);
    const double bracket =
        std::exp(-sigma * u) * (-std::expm1(-sigma * (1.0 - 2.0 * u)));
    return kern * bracket;
  };
  return from_result(quad::integrate_finite(f, 0.0, 22.0, {}, cfg));
}

KernelValue p_sigma_direct(double sigma, const quad::QuadConfig& cfg) {
  quad::QuadConfig inner = cfg;
  inner.abs_tol = std::min(1e-13, cfg.abs_tol);
  inner.rel_tol = std::min(1e-11, cfg.rel_tol);
  inner.max_evals = 200'000;
  long evals = 0;
  bool inner_ok = true;
  auto f = [&](double lambda) {
    // the sin(pi lambda) factor makes the clipped ends contribute
    // below 1e-13; F itself stays bounded there
    if (lambda < 1e-7 || lambda > 1.0 - 1e-7) return 0.0;
    const KernelValue fk = f_kernel(lambda, sigma, inner);
    evals += fk.evals;
    inner_ok = inner_ok && fk.converged;
    return std::sin(lambda * kPi) * fk.value;
  };
  quad::QuadConfig outer = cfg;
  outer.abs_tol = std::max(cfg.abs_tol, 1e-12);
  outer.rel_tol = std::max(cfg.rel_tol, 1e-10);
  auto r = quad::integrate_finite(f, 0.0, 1.0, {}, outer);
  KernelValue k = from_result(r);
  k.evals += evals;
  k.converged = k.converged && inner_ok;
  return k;
}

double p_sigma_arg(const means::MeanPair& m, double s) {
  if (!(m.x > m.y)) {
    throw std::domain_error("p_kernel requires x > y > 0");
  }
  if (!(s > 0.0)) throw std::domain_error("p_kernel requires s > 0");
  return (m.x - m.y) * s;
}

}  // namespace

KernelValue p_kernel(const means::MeanPair& m, double s,
                     const quad::QuadConfig& cfg, PMode mode) {
  const double sigma = p_sigma_arg(m, s);
  return mode == PMode::fast ? p_sigma_fast(sigma, cfg)
                             : p_sigma_direct(sigma, cfg);
}

KernelValue p_kernel_checked(const means::MeanPair& m, double s,
                             const quad::QuadConfig& cfg) {
  const double sigma = p_sigma_arg(m, s);
  KernelValue fast = p_sigma_fast(sigma, cfg);
  const KernelValue direct = p_sigma_direct(sigma, cfg);
  const double gap = std::abs(fast.value - direct.value);
  if (!(gap <= 1e-8)) {
    std::ostringstream os;
    os << "p_kernel mode disagreement " << gap << " at sigma = " << sigma;
    throw std::runtime_error(os.str());
  }
  fast.err_estimate = std::max(fast.err_estimate, gap);
  fast.evals += direct.evals;
  return fast;
}

double h_density(double alpha, double u) {
  if (!(alpha > -1.0 && alpha < 1.0)) {
    throw std::domain_error("h_density requires alpha in (-1,1)");
  }
  require_open_unit(u, "h_density");
  return std::sin(alpha * kPi) / kPi * std::pow(1.0 / u - 1.0, alpha);
}

}  // namespace meanforge::kernels
