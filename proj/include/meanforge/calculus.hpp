#ifndef MEANFORGE_CALCULUS_HPP
#define MEANFORGE_CALCULUS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <utility>
#include <vector>

#include "meanforge/means.hpp"

/// Exact derivative machinery for h_a(t) = (1+1/t)^a and
/// H_a(t) = h_a(t)/a - h_{a-1}(t)/(a-1): coefficient tables as exact
/// integer polynomials in alpha, the closed-form m-th derivatives, and
/// the weighted-geometric derivative identity built on them.
namespace meanforge::calculus {

using BigInt = boost::multiprecision::cpp_int;

/// Polynomial in alpha with exact integer coefficients, c[k] alpha^k.
class AlphaPoly {
 public:
  AlphaPoly() = default;
  explicit AlphaPoly(std::vector<BigInt> coeffs);
  static AlphaPoly constant(BigInt c);

  const std::vector<BigInt>& coeffs() const { return c_; }
  bool operator==(const AlphaPoly& o) const { return c_ == o.c_; }

  AlphaPoly operator+(const AlphaPoly& o) const;
  AlphaPoly operator*(const AlphaPoly& o) const;
  AlphaPoly scaled(const BigInt& k) const;
  /// multiply by the monic linear factor (alpha + ell)
  AlphaPoly times_linear(long ell) const;

  double eval(double alpha) const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

/// Exact coefficient table for one derivative order m, entries k = 0..m-1.
struct CoeffTable {
  int m = 0;
  std::vector<AlphaPoly> entries;
};

/// a_{alpha,m,k} = k! C(m,k) C(m-1,k) prod_{l=0}^{m-k-1} (alpha+l).
AlphaPoly a_coeff(int m, int k);
/// b_{alpha,m,k} = k! C(m+1,k) C(m-1,k) prod_{l=1}^{m-k-1} (alpha+l).
AlphaPoly b_coeff(int m, int k);

CoeffTable a_table(int m);
CoeffTable b_table(int m);

/// Verifies the induction recurrence
///   a_{m+1,k} = (m+alpha-k) a_{m,k} + (2m-k+1) a_{m,k-1}
/// (with its k = 0 and k = m edge cases) as an exact polynomial
/// identity for all m <= m_max; returns the first failing (m,k), or
/// nullopt when the identity holds throughout.
std::optional<std::pair<int, int>> a_recurrence_check(int m_max);

/// m-th derivative of h_alpha(t) = (1+1/t)^alpha, m >= 0, t > 0.
double h_deriv(double alpha, int m, double t);

/// m-th derivative of H_alpha(t); m = 0 evaluates the defining
/// combination h_a/a - h_{a-1}/(a-1) directly.
double H_deriv(double alpha, int m, double t);

/// d/dt of the weighted geometric mean shift:
/// G'_{x,y;l}(t) = l(1-l) H_l((y+t)/(x-y)) for x > y; pairs with y > x
/// are first normalized through the lambda-swap symmetry.
double g_prime(const means::WeightedPair& w, double t);

}  // namespace meanforge::calculus

#endif  // MEANFORGE_CALCULUS_HPP
