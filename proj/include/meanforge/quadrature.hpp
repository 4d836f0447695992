#ifndef MEANFORGE_QUADRATURE_HPP
#define MEANFORGE_QUADRATURE_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <type_traits>
#include <vector>

/// Adaptive one-dimensional integration used throughout meanforge:
/// a double-exponential (tanh-sinh) rule for finite intervals, which
/// absorbs algebraic endpoint singularities, and a truncated variant
/// for semi-infinite integrands with a known exponential decay rate.
namespace meanforge::quad {

struct QuadConfig {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_depth = 12;
  long max_evals = 2'000'000;
};

template <class T>
struct BasicResult {
  T value{};
  double err_estimate = std::numeric_limits<double>::infinity();
  long evals = 0;
  bool converged = false;
};

using IntegralResult = BasicResult<double>;
using ComplexIntegralResult = BasicResult<std::complex<double>>;

/// Known algebraic endpoint behaviour f ~ (u-a)^e resp. (b-u)^e.
/// Exponents must be > -1 (integrability); used as an optional power
/// substitution that flattens the singularity before the core rule.
struct SingularityHint {
  std::optional<double> left_exponent;
  std::optional<double> right_exponent;
};

template <class T>
struct SemiInfiniteResult : BasicResult<T> {
  double truncation = 0.0;
  double tail_bound = 0.0;
};

namespace detail {

inline double mag(double v) { return std::abs(v); }
inline double mag(const std::complex<double>& v) { return std::abs(v); }

[[noreturn]] inline void throw_nonfinite(double x) {
  std::ostringstream os;
  os << "integrand returned a nonfinite value at u = " << x;
  throw std::domain_error(os.str());
}

// Largest |t| worth visiting: beyond it the node offset from the
// endpoint, 2 e^{-pi sinh t}, underflows and the weight vanishes.
constexpr double kTMax = 6.12;

// One tanh-sinh node pair at parameter t>0 (t=0 handled by caller).
// offset = distance of the node from the nearer endpoint, already
// scaled by the half-length; weight likewise includes the half-length.
struct NodePair {
  double offset;
  double weight;
};

inline NodePair de_node(double t, double half) {
  const double u = 1.5707963267948966 * std::sinh(t);
  const double q = std::exp(-2.0 * u);  // underflows harmlessly
  const double den = 1.0 + q;
  NodePair n;
  n.offset = half * 2.0 * q / den;
  n.weight = half * 1.5707963267948966 * std::cosh(t) * 4.0 * q / (den * den);
  return n;
}

/// Core tanh-sinh loop on (a,b). Levels halve the step; the error
/// estimate is the difference of successive levels. Endpoint values are
/// never requested: nodes whose offset underflows to zero are skipped.
template <class T, class F>
BasicResult<T> tanh_sinh(F&& f, double a, double b, const QuadConfig& cfg,
                         long eval_budget) {
  const double half = 0.5 * (b - a);
  const double mid = a + half;

  auto eval = [&](double x) -> T {
    T v = f(x);
    if (!std::isfinite(mag(v))) throw_nonfinite(x);
    return v;
  };

  BasicResult<T> res;
  long evals = 0;

  T sum = eval(mid);  // t = 0 node, weight (pi/2)*half at level 0
  ++evals;
  sum *= 1.5707963267948966 * half;

  const double term_eps = 2.0 * std::numeric_limits<double>::epsilon();
  T integral_prev{};
  double diff_prev = std::numeric_limits<double>::infinity();
  double best_err = std::numeric_limits<double>::infinity();
  T best_value{};
  // largest |t| where a significant term has been seen on any level;
  // the small-term break must not fire before the scan passes it, or
  // mass hidden near an endpoint would be skipped on refined levels
  double t_significant = 0.0;

  double h = 1.0;
  for (int level = 0; level <= cfg.max_depth; ++level) {
    if (level > 0) h *= 0.5;
    const long kstep = (level == 0) ? 1 : 2;
    const long kstart = 1;
    int small_terms = 0;
    for (long k = kstart; k * h <= kTMax; k += kstep) {
      const double t = k * h;
      const NodePair n = de_node(t, half);
      if (n.offset == 0.0 || n.weight == 0.0) break;
      // a node whose offset rounds into its endpoint is dropped on that
      // side only; the integrand is never called at a or b, and the
      // other side keeps its deep nodes (offsets from a 0 endpoint stay
      // exact down to denormals, which is what singular kernels rely on)
      const double xr = b - n.offset;
      const double xl = a + n.offset;
      const bool left_alive = xl != a;
      const bool right_alive = xr != b;
      if (!left_alive && !right_alive) break;
      T term{};
      if (right_alive) term += eval(xr);
      if (left_alive) term += eval(xl);
      evals += (left_alive ? 1 : 0) + (right_alive ? 1 : 0);
      term *= n.weight;
      sum += term;
      if (mag(term) <= term_eps * (mag(sum) + 1e-300)) {
        if (t > t_significant && ++small_terms >= 2) break;
      } else {
        small_terms = 0;
        t_significant = std::max(t_significant, t);
      }
      if (evals >= eval_budget) break;
    }

    T integral = sum * h;
    if (level >= 1) {
      const double diff = mag(integral - integral_prev);
      if (level >= 2 && diff < best_err) {
        best_err = diff;
        best_value = integral;
      }
      const double tol =
          std::max(cfg.abs_tol, cfg.rel_tol * mag(integral));
      if (level >= 2 && diff <= tol) {
        res.value = integral;
        res.err_estimate = diff;
        res.evals = evals;
        res.converged = true;
        return res;
      }
      // stop once successive differences sit at the rounding floor
      if (level >= 3 && diff <= 8.0 * term_eps * mag(integral) &&
          diff_prev <= 8.0 * term_eps * mag(integral)) {
        res.value = integral;
        res.err_estimate = std::max(diff, term_eps * mag(integral));
        res.evals = evals;
        res.converged = res.err_estimate <= tol;
        return res;
      }
      diff_prev = diff;
    }
    integral_prev = integral;
    if (evals >= eval_budget) break;
  }

  if (std::isfinite(best_err)) {
    res.value = best_value;
    res.err_estimate = best_err;
  } else {
    res.value = integral_prev;
    res.err_estimate = diff_prev;
  }
  res.evals = evals;
  res.converged =
      res.err_estimate <= std::max(cfg.abs_tol, cfg.rel_tol * mag(res.value));
  return res;
}

// Power substitution u = a + v^{1/(1+e)} (mirrored for the right end)
// turning an (u-a)^e endpoint into a bounded transformed integrand.
template <class T, class F>
BasicResult<T> left_substituted(F&& f, double a, double b, double expo,
                                const QuadConfig& cfg, long budget) {
  const double p = 1.0 + expo;
  const double inv_p = 1.0 / p;
  const double vb = std::pow(b - a, p);
  auto g = [&, a](double v) -> T {
    const double off = std::pow(v, inv_p);
    const double x = a + off;
    if (off == 0.0 || x == a) return T{};
    return static_cast<T>(f(x) * (inv_p * std::pow(v, inv_p - 1.0)));
  };
  return tanh_sinh<T>(g, 0.0, vb, cfg, budget);
}

template <class T, class F>
BasicResult<T> right_substituted(F&& f, double a, double b, double expo,
                                 const QuadConfig& cfg, long budget) {
  const double p = 1.0 + expo;
  const double inv_p = 1.0 / p;
  const double vb = std::pow(b - a, p);
  auto g = [&, b](double v) -> T {
    const double off = std::pow(v, inv_p);
    const double x = b - off;
    if (off == 0.0 || x == b) return T{};
    return static_cast<T>(f(x) * (inv_p * std::pow(v, inv_p - 1.0)));
  };
  return tanh_sinh<T>(g, 0.0, vb, cfg, budget);
}

template <class T, class F>
BasicResult<T> integrate_finite_impl(F&& f, double a, double b,
                                     const SingularityHint& hint,
                                     const QuadConfig& cfg) {
  if (!(a < b)) throw std::domain_error("integrate_finite: requires a < b");
  if (hint.left_exponent && !(*hint.left_exponent > -1.0))
    throw std::domain_error("integrate_finite: left exponent must be > -1");
  if (hint.right_exponent && !(*hint.right_exponent > -1.0))
    throw std::domain_error("integrate_finite: right exponent must be > -1");

  const long budget = cfg.max_evals;
  if (hint.left_exponent && hint.right_exponent) {
    const double m = 0.5 * (a + b);
    QuadConfig sub = cfg;
    sub.abs_tol = 0.5 * cfg.abs_tol;
    auto l = left_substituted<T>(f, a, m, *hint.left_exponent, sub, budget / 2);
    auto r =
        right_substituted<T>(f, m, b, *hint.right_exponent, sub, budget / 2);
    BasicResult<T> res;
    res.value = l.value + r.value;
    res.err_estimate = l.err_estimate + r.err_estimate;
    res.evals = l.evals + r.evals;
    res.converged = l.converged && r.converged;
    return res;
  }
  if (hint.left_exponent)
    return left_substituted<T>(f, a, b, *hint.left_exponent, cfg, budget);
  if (hint.right_exponent)
    return right_substituted<T>(f, a, b, *hint.right_exponent, cfg, budget);
  return tanh_sinh<T>(f, a, b, cfg, budget);
}

template <class T, class F>
SemiInfiniteResult<T> integrate_semi_infinite_impl(F&& f, double decay,
                                                   const QuadConfig& cfg,
                                                   double min_truncation) {
  if (!(decay > 0.0) || !std::isfinite(decay))
    throw std::domain_error("integrate_semi_infinite: decay must be > 0");

  SemiInfiniteResult<T> res;

  // Estimate the tail constant C with |f(s)| <= C e^{-decay s}.
  double c_est = 0.0;
  for (double m : {0.5, 1.0, 2.0, 4.0, 8.0}) {
    const double s = m / decay;
    const double v = mag(f(s));
    ++res.evals;
    if (std::isfinite(v)) c_est = std::max(c_est, v * std::exp(decay * s));
  }
  c_est = std::max(c_est * 10.0, 1e-280);  // safety factor

  double S = std::log(10.0 * c_est / (decay * cfg.abs_tol)) / decay;
  S = std::max(S, 8.0 / decay);
  S = std::min(S, 1200.0 / decay);
  S = std::max(S, min_truncation);
  res.truncation = S;
  res.tail_bound = c_est * std::exp(-decay * S) / decay;

  // Geometrically growing panels resolve the short-scale structure
  // near s = 0 without wasting nodes in the tail.
  std::vector<double> edges{0.0};
  double e = 1.0 / decay;
  while (e < S) {
    edges.push_back(e);
    e *= 2.0;
  }
  edges.push_back(S);

  QuadConfig sub = cfg;
  sub.abs_tol = cfg.abs_tol / static_cast<double>(edges.size());
  res.converged = true;
  res.err_estimate = res.tail_bound;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const long budget = cfg.max_evals - res.evals;
    if (budget <= 0) {
      res.converged = false;
      break;
    }
    auto part = tanh_sinh<T>(f, edges[i], edges[i + 1], sub, budget);
    res.value += part.value;
    res.err_estimate += part.err_estimate;
    res.evals += part.evals;
    res.converged = res.converged && part.converged;
  }
  return res;
}

}  // namespace detail

template <class F, class T = std::decay_t<std::invoke_result_t<F&, double>>>
BasicResult<T> integrate_finite(F&& f, double a, double b,
                                const SingularityHint& hint = {},
                                const QuadConfig& cfg = {}) {
  return detail::integrate_finite_impl<T>(std::forward<F>(f), a, b, hint, cfg);
}

/// Integrates f over (0, inf) given |f(s)| <= C e^{-decay s}.  The
/// truncation point S is chosen so that C e^{-decay S}/decay falls
/// below abs_tol/10; the bound is added to the error estimate.
template <class F, class T = std::decay_t<std::invoke_result_t<F&, double>>>
SemiInfiniteResult<T> integrate_semi_infinite(F&& f, double decay,
                                              const QuadConfig& cfg = {},
                                              double min_truncation = 0.0) {
  return detail::integrate_semi_infinite_impl<T>(std::forward<F>(f), decay,
                                                 cfg, min_truncation);
}

}  // namespace meanforge::quad

#endif  // MEANFORGE_QUADRATURE_HPP
