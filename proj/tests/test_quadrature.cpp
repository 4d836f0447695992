#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "meanforge/quadrature.hpp"
#include "oracle.hpp"

using namespace meanforge::quad;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("constant and inverse-sqrt endpoint singularity") {
  auto one = [](double) { return 1.0; };
  auto r = integrate_finite(one, 0.0, 1.0);
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-14));

  auto f = [](double u) { return 1.0 / std::sqrt(u); };
  r = integrate_finite(f, 0.0, 1.0);
  CHECK(r.converged);
  CHECK(std::abs(r.value - 2.0) < 1e-12);
}

TEST_CASE("beta-type kernel (1/u-1)^{1/2} integrates to pi/2") {
  auto f = [](double u) { return std::sqrt(1.0 / u - 1.0); };
  auto r = integrate_finite(f, 0.0, 1.0);
  CHECK(r.converged);
  CHECK(std::abs(r.value - kPi / 2.0) < 1e-12);

  // hinted fast path agrees with the plain rule
  SingularityHint hint;
  hint.left_exponent = -0.5;
  hint.right_exponent = 0.5;
  auto rh = integrate_finite(f, 0.0, 1.0, hint);
  CHECK(rh.converged);
  CHECK(std::abs(rh.value - r.value) < 1e-12);
}

TEST_CASE("beta identity across exponents") {
  // int_0^1 (1/u-1)^l du = pi l / sin(pi l)
  for (double l : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    auto f = [l](double u) { return std::pow(1.0 / u - 1.0, l); };
    SingularityHint hint;
    hint.left_exponent = -l;
    hint.right_exponent = l;
    auto r = integrate_finite(f, 0.0, 1.0, hint);
    const double expect = kPi * l / std::sin(kPi * l);
    CHECK(r.converged);
    CHECK(std::abs(r.value - expect) < 1e-11 * expect);
  }
}

TEST_CASE("polynomial exactness through degree 10") {
  // sum_k c_k u^k with alternating coefficients; exact value known
  const double c[11] = {1, -2, 3, -1, 2, 0.5, -0.25, 1.5, -3, 2, 1};
  auto f = [&](double u) {
    double acc = 0.0;
    for (int k = 10; k >= 0; --k) acc = acc * u + c[k];
    return acc;
  };
  double exact = 0.0;
  for (int k = 0; k <= 10; ++k) exact += c[k] / (k + 1);
  auto r = integrate_finite(f, 0.0, 1.0);
  CHECK(r.converged);
  CHECK(std::abs(r.value - exact) < 1e-13);
}

TEST_CASE("endpoints are never evaluated") {
  double min_dist = 1.0;
  auto f = [&](double u) {
    REQUIRE(u > 0.0);
    REQUIRE(u < 1.0);
    min_dist = std::min({min_dist, u, 1.0 - u});
    return std::log(u) * std::log1p(-u);
  };
  auto r = integrate_finite(f, 0.0, 1.0);
  CHECK(r.converged);
  CHECK(min_dist > 0.0);
  // 2 - pi^2/6
  CHECK(std::abs(r.value - (2.0 - kPi * kPi / 6.0)) < 1e-12);
}

TEST_CASE("nonfinite interior value is a hard error") {
  auto f = [](double u) { return 1.0 / (u - 0.5); };
  CHECK_THROWS_AS(integrate_finite(f, 0.0, 1.0), std::domain_error);
}

TEST_CASE("tolerance monotonicity of the error estimate") {
  auto f = [](double u) { return std::exp(-3.0 * u) * std::cos(7.0 * u); };
  QuadConfig loose;
  loose.rel_tol = 1e-4;
  loose.abs_tol = 1e-6;
  QuadConfig tight;
  tight.rel_tol = 1e-12;
  tight.abs_tol = 1e-14;
  auto rl = integrate_finite(f, 0.0, 1.0, {}, loose);
  auto rt = integrate_finite(f, 0.0, 1.0, {}, tight);
  CHECK(rt.err_estimate <= rl.err_estimate);
}

TEST_CASE("complex linearity") {
  auto g = [](double u) { return std::cos(u); };
  auto h = [](double u) { return u * u; };
  auto c = [&](double u) { return std::complex<double>(g(u), h(u)); };
  auto rc = integrate_finite(c, 0.0, 2.0);
  auto rg = integrate_finite(g, 0.0, 2.0);
  auto rh = integrate_finite(h, 0.0, 2.0);
  CHECK(rc.converged);
  const std::complex<double> expect(rg.value, rh.value);
  CHECK(std::abs(rc.value - expect) <=
        rc.err_estimate + rg.err_estimate + rh.err_estimate + 1e-13);
}

TEST_CASE("semi-infinite: plain exponentials") {
  auto r = integrate_semi_infinite([](double s) { return std::exp(-s); }, 1.0);
  CHECK(r.converged);
  CHECK(std::abs(r.value - 1.0) < 1e-11);

  auto r2 = integrate_semi_infinite(
      [](double s) { return s * std::exp(-2.0 * s); }, 2.0);
  CHECK(r2.converged);
  CHECK(std::abs(r2.value - 0.25) < 1e-11);
}

TEST_CASE("semi-infinite: Frullani-type integrand") {
  auto f = [](double s) {
    if (s < 1e-8) return 1.0 - 0.5 * s;  // (1-e^{-s})/s series head
    return std::exp(-s) * (1.0 - std::exp(-s)) / s;
  };
  auto r = integrate_semi_infinite(f, 1.0);
  CHECK(r.converged);
  CHECK(std::abs(r.value - std::log(2.0)) < 1e-10);
  // agreement with an independent reference on the truncated range
  const double ref = oracle::gl_composite(f, 1e-30, r.truncation, 200);
  CHECK(std::abs(r.value - ref) < 1e-11);
}

TEST_CASE("semi-infinite: truncation monotonicity") {
  auto f = [](double s) { return std::exp(-1.5 * s) * std::sin(s) * s; };
  auto base = integrate_semi_infinite(f, 1.4);
  auto longer = integrate_semi_infinite(f, 1.4, {}, 2.0 * base.truncation);
  CHECK(longer.truncation >= 2.0 * base.truncation);
  CHECK(std::abs(longer.value - base.value) <=
        base.tail_bound + base.err_estimate + longer.err_estimate);
}

TEST_CASE("semi-infinite rejects nonpositive decay") {
  CHECK_THROWS_AS(
      integrate_semi_infinite([](double s) { return std::exp(-s); }, 0.0),
      std::domain_error);
  CHECK_THROWS_AS(
      integrate_semi_infinite([](double s) { return std::exp(-s); }, -1.0),
      std::domain_error);
}

TEST_CASE("complex semi-infinite integrand") {
  const std::complex<double> z(0.0, 2.0);
  auto f = [&](double s) { return std::exp(-s * (1.0 + z)); };
  auto r = integrate_semi_infinite(f, 1.0);
  CHECK(r.converged);
  // int_0^inf e^{-(1+z)s} ds = 1/(1+z)
  CHECK(std::abs(r.value - 1.0 / (1.0 + z)) < 1e-10);
}
