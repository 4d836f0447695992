#include "meanforge/representations.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "meanforge/complex_ops.hpp"

namespace meanforge::repr {

namespace {

constexpr double kPi = 3.14159265358979323846;

using std::complex;

std::string fmt_value(complex<double> z) {
  char buf[64];
  if (z.imag() == 0.0) {
    std::snprintf(buf, sizeof(buf), "%.10g", z.real());
  } else {
    std::snprintf(buf, sizeof(buf), "%.10g,%.10g", z.real(), z.imag());
  }
  return buf;
}

ResidualReport finish(std::string identity, std::string inputs,
                      complex<double> lhs, complex<double> rhs, double err,
                      long evals, bool converged) {
  ResidualReport r;
  r.identity = std::move(identity);
  r.inputs = std::move(inputs);
  r.lhs = lhs;
  r.rhs = rhs;
  r.abs_residual = std::abs(lhs - rhs);
  r.rel_residual = r.abs_residual / std::max(std::abs(lhs), 1e-300);
  r.rhs_err_estimate = err;
  r.evals = evals;
  r.converged = converged;
  return r;
}

ResidualReport structural(std::string identity, std::string inputs,
                          complex<double> value) {
  return finish(std::move(identity), std::move(inputs), value, value, 0.0, 0,
                true);
}

quad::QuadConfig inner_config(const quad::QuadConfig& cfg) {
  quad::QuadConfig inner = cfg;
  inner.abs_tol = std::min(cfg.abs_tol, 1e-12);
  inner.rel_tol = std::min(cfg.rel_tol, 1e-10);
  inner.max_evals = 100000;
  return inner;
}

struct OrderedWeighted {
  double x, y, lambda;  // x > y after normalization
};

OrderedWeighted normalize(const means::WeightedPair& w) {
  OrderedWeighted o{w.pair.x, w.pair.y, w.lambda};
  if (o.y > o.x) {
    std::swap(o.x, o.y);
    o.lambda = 1.0 - o.lambda;
  }
  return o;
}

// Complex z with nonzero imaginary part is admissible for the mean
// itself anywhere off the cut, but the semi-infinite representation
// integral only converges for Re z > -y.
void require_integrable_z(const means::EvalPoint& z, double y) {
  z.require_off_cut(y);
  if (!(z.value().real() > -y)) {
    throw std::domain_error(
        "representation integral requires Re z > -min(x,y)");
  }
}

struct Correction {
  complex<double> value{};
  double err = 0.0;
  long evals = 0;
  bool converged = true;
};

// int_0^inf K(s) e^{-s y} (1 - e^{-s z})/s ds
template <class KernelFn>
Correction corr_shift(KernelFn&& kernel, double y, const means::EvalPoint& z,
                      const quad::QuadConfig& cfg) {
  Correction c;
  const double decay = y + std::min(0.0, z.value().real());
  if (z.is_real()) {
    const double t = z.real_value();
    auto f = [&](double s) {
      return kernel(s) * std::exp(-s * y) * one_minus_exp_over(s, t);
    };
    auto r = quad::integrate_semi_infinite(f, decay, cfg);
    c.value = r.value;
    c.err = r.err_estimate;
    c.evals += r.evals;
    c.converged = r.converged;
  } else {
    const complex<double> zc = z.value();
    auto f = [&](double s) -> complex<double> {
      return kernel(s) * std::exp(-s * y) * one_minus_exp_over(s, zc);
    };
    auto r = quad::integrate_semi_infinite(f, decay, cfg);
    c.value = r.value;
    c.err = r.err_estimate;
    c.evals += r.evals;
    c.converged = r.converged;
  }
  return c;
}

// int_0^inf K(s) e^{-s y} / s ds  (the z -> inf limit of corr_shift)
template <class KernelFn>
Correction corr_limit(KernelFn&& kernel, double y,
                      const quad::QuadConfig& cfg) {
  Correction c;
  auto f = [&](double s) { return kernel(s) * std::exp(-s * y) / s; };
  auto r = quad::integrate_semi_infinite(f, y, cfg);
  c.value = r.value;
  c.err = r.err_estimate;
  c.evals = r.evals;
  c.converged = r.converged;
  return c;
}

}  // namespace

ResidualReport h_alpha_repr(double alpha, const means::EvalPoint& z,
                            const quad::QuadConfig& cfg) {
  if (!(alpha > -1.0 && alpha < 1.0) || alpha == 0.0) {
    throw std::domain_error("h_alpha_repr requires alpha in (-1,1) \\ {0}");
  }
  z.require_off_cut(0.0);
  const complex<double> zc = z.value();

  char in[96];
  std::snprintf(in, sizeof(in), "alpha=%.10g;z=%s", alpha,
                fmt_value(zc).c_str());

  // split at 1/2; the right half is parameterized in om = 1-u so its
  // (1-u)^alpha behaviour sits at an exact-offset endpoint
  auto left = [alpha, zc](double u) -> complex<double> {
    return std::pow(1.0 / u - 1.0, alpha) / (u + zc);
  };
  auto right = [alpha, zc](double om) -> complex<double> {
    return std::pow(om / (1.0 - om), alpha) / (1.0 - om + zc);
  };
  quad::SingularityHint hl, hr;
  hl.left_exponent = -alpha;
  hr.left_exponent = alpha;
  quad::QuadConfig sub = cfg;
  sub.abs_tol = 0.5 * cfg.abs_tol;
  const auto rl = quad::integrate_finite(left, 0.0, 0.5, hl, sub);
  const auto rr = quad::integrate_finite(right, 0.0, 0.5, hr, sub);

  const complex<double> integral = rl.value + rr.value;
  const double coef = std::sin(alpha * kPi) / kPi;
  const complex<double> rhs = 1.0 + coef * integral;
  const complex<double> lhs = principal_pow(1.0 + 1.0 / zc, alpha);
  return finish("h-alpha", in, lhs, rhs,
                std::abs(coef) * (rl.err_estimate + rr.err_estimate),
                rl.evals + rr.evals, rl.converged && rr.converged);
}

ResidualReport weighted_geometric_repr(const means::WeightedPair& w,
                                       const means::EvalPoint& z,
                                       const quad::QuadConfig& cfg) {
  const OrderedWeighted o = normalize(w);
  char in[128];
  std::snprintf(in, sizeof(in), "x=%.10g;y=%.10g;lambda=%.10g;z=%s", w.pair.x,
                w.pair.y, w.lambda, fmt_value(z.value()).c_str());

  if (o.x == o.y) {
    return structural("weighted-geometric", in, o.x + z.value());
  }
  require_integrable_z(z, o.y);
  const complex<double> lhs = means::weighted_geometric(w, z);
  const double gxy = std::pow(o.x, o.lambda) * std::pow(o.y, 1.0 - o.lambda);
  if (z.value() == 0.0) {
    return structural("weighted-geometric", in, gxy);
  }

  const quad::QuadConfig inner = inner_config(cfg);
  long inner_evals = 0;
  bool inner_ok = true;
  const double gap = o.x - o.y;
  auto kern = [&](double s) {
    const auto f = kernels::f_kernel(o.lambda, gap * s, inner);
    inner_evals += f.evals;
    inner_ok = inner_ok && f.converged;
    return f.value;
  };
  const Correction c = corr_shift(kern, o.y, z, cfg);
  const double coef = std::sin(o.lambda * kPi) / kPi * gap;
  const complex<double> rhs = gxy + z.value() + coef * c.value;
  return finish("weighted-geometric", in, lhs, rhs, std::abs(coef) * c.err,
                c.evals + inner_evals, c.converged && inner_ok);
}

ResidualReport weighted_am_gm_diff(const means::WeightedPair& w,
                                   const quad::QuadConfig& cfg) {
  const OrderedWeighted o = normalize(w);
  char in[96];
  std::snprintf(in, sizeof(in), "x=%.10g;y=%.10g;lambda=%.10g", w.pair.x,
                w.pair.y, w.lambda);
  if (o.x == o.y) return structural("am-gm", in, 0.0);

  const double lhs = (o.lambda * o.x + (1.0 - o.lambda) * o.y) -
                     std::pow(o.x, o.lambda) * std::pow(o.y, 1.0 - o.lambda);
  const quad::QuadConfig inner = inner_config(cfg);
  long inner_evals = 0;
  bool inner_ok = true;
  const double gap = o.x - o.y;
  auto kern = [&](double s) {
    const auto f = kernels::f_kernel(o.lambda, gap * s, inner);
    inner_evals += f.evals;
    inner_ok = inner_ok && f.converged;
    return f.value;
  };
  const Correction c = corr_limit(kern, o.y, cfg);
  const double coef = std::sin(o.lambda * kPi) / kPi * gap;
  return finish("am-gm", in, lhs, coef * c.value.real(),
                std::abs(coef) * c.err, c.evals + inner_evals,
                c.converged && inner_ok);
}

ResidualReport log_mean_repr(const means::MeanPair& m,
                             const means::EvalPoint& z,
                             const quad::QuadConfig& cfg) {
  means::MeanPair o = m.x >= m.y ? m : means::MeanPair{m.y, m.x};
  char in[128];
  std::snprintf(in, sizeof(in), "x=%.10g;y=%.10g;z=%s", m.x, m.y,
                fmt_value(z.value()).c_str());
  if (o.x == o.y) return structural("log-mean", in, o.x + z.value());
  require_integrable_z(z, o.y);

  const double lxy = means::mean(means::MeanKind::logarithmic, o);
  if (z.value() == 0.0) return structural("log-mean", in, lxy);

  const complex<double> zc = z.value();
  const complex<double> lhs =
      (o.x - o.y) / (principal_log(o.x + zc) - principal_log(o.y + zc));

  const quad::QuadConfig inner = inner_config(cfg);
  long inner_evals = 0;
  bool inner_ok = true;
  auto kern = [&](double s) {
    const auto p = kernels::p_kernel(o, s, inner, kernels::PMode::fast);
    inner_evals += p.evals;
    inner_ok = inner_ok && p.converged;
    return p.value;
  };
  const Correction c = corr_shift(kern, o.y, z, cfg);
  const double coef = (o.x - o.y) / kPi;
  const complex<double> rhs = lxy + zc + coef * c.value;
  return finish("log-mean", in, lhs, rhs, coef * c.err,
                c.evals + inner_evals, c.converged && inner_ok);
}

ResidualReport a_l_diff(const means::MeanPair& m, const quad::QuadConfig& cfg) {
  means::MeanPair o = m.x >= m.y ? m : means::MeanPair{m.y, m.x};
  char in[96];
  std::snprintf(in, sizeof(in), "x=%.10g;y=%.10g", m.x, m.y);
  if (o.x == o.y) return structural("a-l", in, 0.0);

  const double lhs = means::mean(means::MeanKind::arithmetic, o) -
                     means::mean(means::MeanKind::logarithmic, o);
  const quad::QuadConfig inner = inner_config(cfg);
  long inner_evals = 0;
  bool inner_ok = true;
  auto kern = [&](double s) {
    const auto p = kernels::p_kernel(o, s, inner, kernels::PMode::fast);
    inner_evals += p.evals;
    inner_ok = inner_ok && p.converged;
    return p.value;
  };
  const Correction c = corr_limit(kern, o.y, cfg);
  const double coef = (o.x - o.y) / kPi;
  return finish("a-l", in, lhs, coef * c.value.real(), coef * c.err,
                c.evals + inner_evals, c.converged && inner_ok);
}

ResidualReport geometric_repr_rho(const means::MeanPair& m,
                                  const means::EvalPoint& z,
                                  const quad::QuadConfig& cfg) {
  means::MeanPair o = m.x >= m.y ? m : means::MeanPair{m.y, m.x};
  char in[128];
  std::snprintf(in, sizeof(in), "x=%.10g;y=%.10g;z=%s", m.x, m.y,
                fmt_value(z.value()).c_str());
  if (o.x == o.y) return structural("geometric-rho", in, o.x + z.value());
  require_integrable_z(z, o.y);

  const double gxy = std::sqrt(o.x * o.y);
  if (z.value() == 0.0) return structural("geometric-rho", in, gxy);

  const means::WeightedPair half{o, 0.5};
  const complex<double> lhs = means::weighted_geometric(half, z);

  const quad::QuadConfig inner = inner_config(cfg);
  long inner_evals = 0;
  bool inner_ok = true;
  const double gap = o.x - o.y;
  auto kern = [&](double s) {
    const auto r = kernels::rho(gap * s, inner);
    inner_evals += r.evals;
    inner_ok = inner_ok && r.converged;
    return r.value;
  };
  const Correction c = corr_shift(kern, o.y, z, cfg);
  // rho(s) = 2 F(1/2,s), so the sin(pi/2)/pi (x-y) prefactor of the
  // weighted route becomes (x-y)/(2 pi) in the rho normalization
  const double coef = gap / (2.0 * kPi);
  const complex<double> rhs = gxy + z.value() + coef * c.value;
  return finish("geometric-rho", in, lhs, rhs, coef * c.err,
                c.evals + inner_evals, c.converged && inner_ok);
}

std::array<ResidualReport, 3> harmonic_repr(const means::MeanPair& m,
                                            double s_shift,
                                            const quad::QuadConfig& cfg) {
  if (!(s_shift > -m.min())) {
    throw std::domain_error("harmonic_repr requires s_shift > -min(x,y)");
  }
  const double x = m.x, y = m.y, s = s_shift;
  // the H(s,y+s) integral carries (1-e^{-su}) e^{-yu/2}, which only
  // converges for s > -y/2; the identity holds on that whole range
  if (!(s > -y / 2.0)) {
    throw std::domain_error(
        "the H(s, y+s) identity diverges for s_shift <= -y/2");
  }
  char in[96];
  std::snprintf(in, sizeof(in), "x=%.10g;y=%.10g;s=%.10g", x, y, s);

  auto harmonic = [](double a, double b) { return 2.0 * a * b / (a + b); };

  // shifted representation; s = 0 reduces structurally to H(x,y)
  ResidualReport rep1;
  if (s == 0.0) {
    rep1 = structural("harmonic-shift", in, harmonic(x, y));
  } else {
    auto f1 = [&](double u) {
      return -std::expm1(-s * u) * std::exp(-(x + y) * u / 2.0);
    };
    const auto r1 = quad::integrate_semi_infinite(
        f1, (x + y) / 2.0 + std::min(0.0, s), cfg);
    const double quarter = (x - y) * (x - y) / 4.0;
    rep1 = finish("harmonic-shift", in, harmonic(x + s, y + s),
                  harmonic(x, y) + s + quarter * r1.value,
                  quarter * r1.err_estimate, r1.evals, r1.converged);
  }

  // closed A - H gap
  auto f2 = [&](double u) { return std::exp(-(x + y) * u); };
  const auto r2 = quad::integrate_semi_infinite(f2, x + y, cfg);
  const double half_sq = (x - y) * (x - y) / 2.0;
  ResidualReport rep2 =
      finish("harmonic-a-h", in, (x + y) / 2.0 - harmonic(x, y),
             half_sq * r2.value, half_sq * r2.err_estimate, r2.evals,
             r2.converged);

  // H(s, y+s) = s + (y^2/4) int (1-e^{-su}) e^{-yu/2} du
  ResidualReport rep3;
  if (s == 0.0) {
    rep3 = structural("harmonic-shift-pair", in, 0.0);
  } else {
    auto f3 = [&](double u) {
      return -std::expm1(-s * u) * std::exp(-y * u / 2.0);
    };
    const auto r3 = quad::integrate_semi_infinite(
        f3, y / 2.0 + std::min(0.0, s), cfg);
    rep3 = finish("harmonic-shift-pair", in, harmonic(s, y + s),
                  s + y * y / 4.0 * r3.value, y * y / 4.0 * r3.err_estimate,
                  r3.evals, r3.converged);
  }

  return {rep1, rep2, rep3};
}

ResidualReport gn_repr(const means::PositiveTuple& a,
                       const means::EvalPoint& z,
                       const quad::QuadConfig& cfg) {
  z.require_off_cut(a.min());
  const complex<double> zc = z.value();
  const auto& v = a.values();
  const int n = static_cast<int>(a.n());

  std::string in = "a=";
  for (int i = 0; i < n; ++i) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), i ? ",%.10g" : "%.10g", v[i]);
    in += buf;
  }
  in += ";z=" + fmt_value(zc);

  complex<double> total{};
  double err = 0.0;
  long evals = 0;
  bool ok = true;
  for (int l = 1; l < n; ++l) {
    const double lo = v[l - 1], hi = v[l];
    if (lo == hi) continue;  // degenerate segment contributes zero
    auto f = [&](double t) -> complex<double> {
      double prod = 1.0;
      for (double ak : v) prod *= std::abs(ak - t);
      return std::pow(prod, 1.0 / n) / (t + zc);
    };
    quad::SingularityHint hint;
    hint.left_exponent = 1.0 / n;
    hint.right_exponent = 1.0 / n;
    const auto r = quad::integrate_finite(f, lo, hi, hint, cfg);
    total += std::sin(l * kPi / n) * r.value;
    err += r.err_estimate;
    evals += r.evals;
    ok = ok && r.converged;
  }

  const complex<double> rhs = means::an(a) + zc - total / kPi;
  const complex<double> lhs = means::gn(a, z);
  return finish("gn", in, lhs, rhs, err / kPi, evals, ok);
}

ResidualReport identric_closed(const means::MeanPair& m, double t,
                               const quad::QuadConfig& cfg) {
  if (!(t > -m.min())) {
    throw std::domain_error("identric_closed requires t > -min(x,y)");
  }
  const double xs = m.x + t, ys = m.y + t;
  char in[96];
  std::snprintf(in, sizeof(in), "x=%.10g;y=%.10g;t=%.10g", m.x, m.y, t);
  if (xs == ys) return structural("identric", in, xs);

  const double lhs = means::mean(means::MeanKind::identric, {xs, ys});
  const double lo = std::min(xs, ys), hi = std::max(xs, ys);
  auto f = [](double u) { return std::log(u); };
  const auto r = quad::integrate_finite(f, lo, hi, {}, cfg);
  const double rhs = std::exp(r.value / (hi - lo));
  return finish("identric", in, lhs, rhs, rhs * r.err_estimate / (hi - lo),
                r.evals, r.converged);
}

ResidualReport log_mean_integral_form(const means::MeanPair& m,
                                      const quad::QuadConfig& cfg) {
  char in[64];
  std::snprintf(in, sizeof(in), "x=%.10g;y=%.10g", m.x, m.y);
  const double lhs = means::mean(means::MeanKind::logarithmic, m);
  auto f = [&](double u) {
    return std::pow(m.x, u) * std::pow(m.y, 1.0 - u);
  };
  const auto r = quad::integrate_finite(f, 0.0, 1.0, {}, cfg);
  return finish("log-integral", in, lhs, r.value, r.err_estimate, r.evals,
                r.converged);
}

}  // namespace meanforge::repr
