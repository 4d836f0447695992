#include "meanforge/means.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "meanforge/complex_ops.hpp"

namespace meanforge::means {

namespace {

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw std::domain_error(std::string(what) + " must be finite");
  }
}

// All Stolarsky branches are evaluated through g(p) = ln N(p) with
// N(p) = (yb^p - xb^p)/p = int_xb^yb u^{p-1} du, where yb > xb > 0 and
// delta = ln(yb/xb) > 0:
//   ln E(r,s) = (g(s) - g(r)) / (s - r),   ln E(r,r) = g'(r).
// N is analytic and positive, so the expm1/log1p forms below stay
// accurate through every 0/0 region of the raw textbook formulas.

// ln[ expm1(p*delta)/p ], continued by ln(delta) at p = 0.
double log_phi(double p, double delta) {
  if (p == 0.0) return std::log(delta);
  const double w = p * delta;
  if (std::abs(w) < 1e-3) {
    return std::log(delta) +
           std::log1p(w * (0.5 + w * (1.0 / 6.0 + w / 24.0)));
  }
  if (w > 700.0) return w + std::log1p(-std::exp(-w)) - std::log(p);
  if (w < -700.0) return -std::log(-p);
  return std::log(std::expm1(w) / p);
}

// g'(p) = d/dp ln N(p) = ln(xb) - 1/p + delta/(1 - e^{-p delta});
// Bernoulli series below |p delta| = 1e-3 removes the pole cancellation.
double g_prime(double p, double lx, double delta) {
  const double w = p * delta;
  if (std::abs(w) < 1e-3) {
    return lx + delta * (0.5 + w * (1.0 / 12.0) - w * w * w / 720.0);
  }
  return lx - 1.0 / p + delta / (-std::expm1(-w));
}

// g'''(p), used by the second-order midpoint branch.
double g_third(double p, double delta) {
  const double w = p * delta;
  if (std::abs(w) < 0.1) return -p * delta * delta * delta * delta / 120.0;
  if (std::abs(w) > 35.0) return -2.0 / (p * p * p);
  const double ew = std::exp(-w);
  const double om = 1.0 - ew;
  return -2.0 / (p * p * p) +
         delta * delta * delta * ew * (1.0 + ew) / (om * om * om);
}

struct OrderedPair {
  double lo, hi, lx, delta;
};

OrderedPair ordered(const MeanPair& m) {
  OrderedPair o;
  o.lo = m.min();
  o.hi = m.max();
  o.lx = std::log(o.lo);
  o.delta = std::log1p((o.hi - o.lo) / o.lo);
  return o;
}

}  // namespace

MeanPair::MeanPair(double x_, double y_) : x(x_), y(y_) {
  require_finite(x_, "x");
  require_finite(y_, "y");
  if (!(x_ > 0.0) || !(y_ > 0.0)) {
    throw std::domain_error("MeanPair requires positive x and y");
  }
}

WeightedPair::WeightedPair(MeanPair p, double lam) : pair(p), lambda(lam) {
  require_finite(lam, "lambda");
  if (!(lam > 0.0 && lam < 1.0)) {
    throw std::domain_error("lambda must lie in the open interval (0,1)");
  }
}

PositiveTuple::PositiveTuple(std::vector<double> values) : a_(std::move(values)) {
  if (a_.size() < 2) {
    throw std::domain_error("PositiveTuple requires at least two entries");
  }
  for (double v : a_) {
    require_finite(v, "tuple entry");
    if (!(v > 0.0)) {
      throw std::domain_error("PositiveTuple entries must be positive");
    }
  }
  std::sort(a_.begin(), a_.end());
}

void EvalPoint::require_off_cut(double cut_min) const {
  if (z_.imag() == 0.0 && !(z_.real() > -cut_min)) {
    throw std::domain_error(
        "evaluation point lies on the branch cut (-inf, -min]");
  }
}

MeanKind mean_kind_from_string(const std::string& name) {
  if (name == "arithmetic") return MeanKind::arithmetic;
  if (name == "geometric") return MeanKind::geometric;
  if (name == "harmonic") return MeanKind::harmonic;
  if (name == "logarithmic") return MeanKind::logarithmic;
  if (name == "identric") return MeanKind::identric;
  if (name == "power") return MeanKind::power;
  throw std::domain_error("unknown mean kind: " + name);
}

double stolarsky(const StolarskyParams& p, const MeanPair& m) {
  require_finite(p.r, "r");
  require_finite(p.s, "s");
  if (m.x == m.y) return m.x;

  const OrderedPair o = ordered(m);
  const double rs_scale = std::max({1.0, std::abs(p.r), std::abs(p.s)});
  const double gap = std::abs(p.s - p.r) / rs_scale;

  double ln_e;
  if (gap < 1e-8) {
    // limit branch E(q,q) at q = min(r,s); exact for r == s
    ln_e = g_prime(std::min(p.r, p.s), o.lx, o.delta);
  } else if (gap < 1e-5) {
    // second-order series around the midpoint of the divided difference
    const double mid = 0.5 * (p.r + p.s);
    const double d = p.s - p.r;
    ln_e = g_prime(mid, o.lx, o.delta) + g_third(mid, o.delta) * d * d / 24.0;
  } else {
    ln_e = o.lx +
           (log_phi(p.s, o.delta) - log_phi(p.r, o.delta)) / (p.s - p.r);
  }
  return std::exp(ln_e);
}

double mean(MeanKind kind, const MeanPair& m, double power_r) {
  switch (kind) {
    case MeanKind::arithmetic:
      return 0.5 * (m.x + m.y);
    case MeanKind::geometric:
      return std::sqrt(m.x * m.y);
    case MeanKind::harmonic:
      return 2.0 * m.x * m.y / (m.x + m.y);
    case MeanKind::logarithmic: {
      if (m.x == m.y) return m.x;
      const OrderedPair o = ordered(m);
      return (o.hi - o.lo) / o.delta;
    }
    case MeanKind::identric: {
      if (m.x == m.y) return m.x;
      const OrderedPair o = ordered(m);
      return std::exp(g_prime(1.0, o.lx, o.delta));
    }
    case MeanKind::power: {
      require_finite(power_r, "power exponent");
      if (power_r == 0.0) return std::sqrt(m.x * m.y);
      const double lo = m.min(), hi = m.max();
      const double q = lo / hi;
      if (power_r > 0.0) {
        return hi * std::pow(0.5 * (1.0 + std::pow(q, power_r)),
                             1.0 / power_r);
      }
      return lo *
             std::pow(0.5 * (1.0 + std::pow(q, -power_r)), 1.0 / power_r);
    }
  }
  throw std::logic_error("unreachable mean kind");
}

std::complex<double> weighted_geometric(const WeightedPair& w,
                                        const EvalPoint& p) {
  p.require_off_cut(w.pair.min());
  if (p.is_real()) return weighted_geometric(w, p.real_value());
  const std::complex<double> z = p.value();
  return principal_pow(w.pair.x + z, w.lambda) *
         principal_pow(w.pair.y + z, 1.0 - w.lambda);
}

double weighted_geometric(const WeightedPair& w, double t) {
  if (!(t > -w.pair.min())) {
    throw std::domain_error(
        "shift t must exceed -min(x,y) for the weighted geometric mean");
  }
  return std::pow(w.pair.x + t, w.lambda) *
         std::pow(w.pair.y + t, 1.0 - w.lambda);
}

double weighted_arithmetic(const WeightedPair& w) {
  return w.lambda * w.pair.x + (1.0 - w.lambda) * w.pair.y;
}

std::complex<double> gn(const PositiveTuple& a, const EvalPoint& p) {
  p.require_off_cut(a.min());
  if (p.is_real()) return gn(a, p.real_value());
  const std::complex<double> z = p.value();
  std::complex<double> acc{};
  for (double ak : a.values()) acc += principal_log(ak + z);
  return std::exp(acc / static_cast<double>(a.n()));
}

double gn(const PositiveTuple& a, double t) {
  if (!(t > -a.min())) {
    throw std::domain_error("shift t must exceed -a_1 for G_n");
  }
  double prod = 1.0;
  for (double ak : a.values()) prod *= ak + t;
  return std::pow(prod, 1.0 / static_cast<double>(a.n()));
}

double an(const PositiveTuple& a) {
  double sum = 0.0;
  for (double ak : a.values()) sum += ak;
  return sum / static_cast<double>(a.n());
}

}  // namespace meanforge::means
