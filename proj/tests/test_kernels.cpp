#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "meanforge/kernels.hpp"
#include "oracle.hpp"

using namespace meanforge;
using namespace meanforge::kernels;

namespace {
constexpr double kPi = 3.14159265358979323846;

// independent brute-force F: same split integrand, but composite
// Gauss-Legendre panels with integer-power substitutions
double f_oracle(double lambda, double s, int panels = 160) {
  auto left = [lambda, s](double u) {
    return std::pow(1.0 / u - 1.0, lambda) * (1.0 - lambda / (1.0 - u)) *
           std::exp(-u * s);
  };
  auto right = [lambda, s](double w) {
    return std::pow(w / (1.0 - w), lambda) * (1.0 - lambda / w) *
           std::exp(-(1.0 - w) * s);
  };
  return oracle::gl_singular(left, 0.0, 1.0 - lambda, -lambda, 0.0, panels) +
         oracle::gl_singular(right, 0.0, lambda, lambda - 1.0, 0.0, panels);
}
}  // namespace

TEST_CASE("q_weight closed form and antisymmetry") {
  CHECK(q_weight(0.5) == 0.0);
  CHECK(q_weight(0.2) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(q_weight(0.8) == doctest::Approx(-1.5).epsilon(1e-15));
  // exact cancellation on a dyadic grid where 1-u is exact
  for (int k = 1; k < 256; ++k) {
    const double u = k / 256.0;
    CHECK(q_weight(u) + q_weight(1.0 - u) == 0.0);
  }
  CHECK_THROWS_AS(q_weight(0.0), std::domain_error);
  CHECK_THROWS_AS(q_weight(1.0), std::domain_error);
}

TEST_CASE("rho: dual forms agree and the value stays nonnegative") {
  for (double s : {0.01, 0.1, 1.0, 10.0, 100.0}) {
    const KernelValue a = rho(s);
    const KernelValue b = rho_alt(s);
    CHECK(a.converged);
    CHECK(b.converged);
    CHECK(std::abs(a.value - b.value) <= 1e-10);
    CHECK(a.value >= -a.err_estimate);
  }
  // frozen anchors computed with an independent reference integrator
  CHECK(rho(1.0).value == doctest::Approx(0.4914104461542079).epsilon(1e-10));
  CHECK(rho(10.0).value == doctest::Approx(0.5151340692256421).epsilon(1e-10));
  // s -> 0+ limit: the bracket kills the integrand
  CHECK(std::abs(rho(1e-8).value) < 1e-8);
  CHECK_THROWS_AS(rho(0.0), std::domain_error);
}

TEST_CASE("rho equals twice the lambda = 1/2 slice of F") {
  // the lambda = 1/2 integrand of F reduces to q(u)/2 pointwise
  for (double s : {0.3, 1.0, 7.0}) {
    const double f = f_kernel(0.5, s).value;
    CHECK(std::abs(rho(s).value - 2.0 * f) <= 1e-10);
  }
}

TEST_CASE("F kernel: null identity at s = 0 and positivity for s > 0") {
  for (double lam : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}) {
    const KernelValue z = f_kernel(lam, 0.0);
    CHECK(std::abs(z.value) <= 1e-10);
  }
  for (double lam : {0.05, 0.2, 0.5, 0.8, 0.95}) {
    for (double s : {0.1, 1.0, 5.0, 20.0, 50.0}) {
      const KernelValue v = f_kernel(lam, s);
      CHECK(v.converged);
      CHECK(v.value > v.err_estimate);
    }
  }
}

TEST_CASE("F kernel against the independent reference") {
  CHECK(f_kernel(0.5, 1.0).value ==
        doctest::Approx(0.2457052230771039).epsilon(1e-11));
  for (double lam : {0.15, 0.5, 0.85}) {
    for (double s : {0.5, 3.0}) {
      const double ref = f_oracle(lam, s);
      CHECK(f_kernel(lam, s).value == doctest::Approx(ref).epsilon(1e-10));
    }
  }
}

TEST_CASE("Q_lambda closed form and sign structure") {
  CHECK(q_lambda(0.5, 0.5) == 0.0);
  CHECK(q_lambda(0.5, 0.2) == doctest::Approx(3.0 / kPi).epsilon(1e-14));
  for (double lam : {0.2, 0.5, 0.7}) {
    for (int i = 1; i < 40; ++i) {
      const double u = i / 40.0;
      const double q = q_lambda(lam, u);
      const double ref = 1.0 - lam - u;
      if (std::abs(ref) > 1e-12) {
        CHECK(q * ref > 0.0);
      }
    }
  }
}

TEST_CASE("P kernel: fast and direct modes agree") {
  const means::MeanPair m21{2, 1};
  const means::MeanPair m52{5, 2};
  for (double s : {0.1, 1.0, 10.0}) {
    for (const auto& m : {m21, m52}) {
      const KernelValue fast = p_kernel(m, s, {}, PMode::fast);
      const KernelValue direct = p_kernel(m, s, {}, PMode::direct);
      CHECK(fast.converged);
      CHECK(std::abs(fast.value - direct.value) <= 1e-8);
      CHECK(fast.value >= 0.0);
      CHECK_NOTHROW(p_kernel_checked(m, s));
    }
  }
  // vanishes with s
  CHECK(std::abs(p_kernel(m21, 1e-12).value) < 1e-11);
  CHECK_THROWS_AS(p_kernel({1, 2}, 1.0), std::domain_error);
  CHECK_THROWS_AS(p_kernel(m21, 0.0), std::domain_error);
}

TEST_CASE("h_density values and normalization") {
  CHECK(h_density(0.5, 0.5) == doctest::Approx(1.0 / kPi).epsilon(1e-15));
  CHECK(std::abs(h_density(1e-9, 0.3)) < 1e-8);
  for (double alpha : {0.1, 0.5, 0.9}) {
    for (double u : {0.05, 0.3, 0.6, 0.95}) {
      CHECK(h_density(alpha, u) >= 0.0);
    }
    // int_0^1 density du = alpha (Beta identity)
    auto f = [alpha](double u) { return h_density(alpha, u); };
    quad::SingularityHint hint;
    hint.left_exponent = -alpha;
    hint.right_exponent = alpha;
    const auto r = quad::integrate_finite(f, 0.0, 1.0, hint);
    CHECK(r.value == doctest::Approx(alpha).epsilon(1e-10));
  }
}
