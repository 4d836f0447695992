#ifndef MEANFORGE_COMPLEX_OPS_HPP
#define MEANFORGE_COMPLEX_OPS_HPP

#include <cmath>
#include <complex>

namespace meanforge {

/// Principal-branch complex power: exp(p(ln|w| + i Arg w)), Arg in (-pi, pi].
inline std::complex<double> principal_pow(std::complex<double> w, double p) {
  return std::exp(p * std::log(w));
}

inline std::complex<double> principal_log(std::complex<double> w) {
  return std::log(w);
}

/// (1 - e^{-s z}) / s, stable for small |s z| via a 5-term series.
inline std::complex<double> one_minus_exp_over(double s,
                                               std::complex<double> z) {
  const std::complex<double> w = s * z;
  if (std::abs(w) < 1e-4) {
    // z (1 - w/2 + w^2/6 - w^3/24 + w^4/120)
    return z * (1.0 +
                w * (-0.5 + w * (1.0 / 6.0 + w * (-1.0 / 24.0 + w / 120.0))));
  }
  return (1.0 - std::exp(-w)) / s;
}

inline double one_minus_exp_over(double s, double t) {
  const double w = s * t;
  if (std::abs(w) < 1e-4) {
    return t * (1.0 +
                w * (-0.5 + w * (1.0 / 6.0 + w * (-1.0 / 24.0 + w / 120.0))));
  }
  return -std::expm1(-w) / s;
}

}  // namespace meanforge

#endif  // MEANFORGE_COMPLEX_OPS_HPP
