#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "meanforge/means.hpp"

using namespace meanforge::means;
using std::complex;

namespace {
// raw textbook branch, valid only away from the degenerate regions
double stolarsky_raw(double r, double s, double x, double y) {
  return std::pow(r * (std::pow(y, s) - std::pow(x, s)) /
                      (s * (std::pow(y, r) - std::pow(x, r))),
                  1.0 / (s - r));
}

double stolarsky_rr(double r, double x, double y) {
  return std::exp(-1.0 / r) *
         std::pow(std::pow(x, std::pow(x, r)) / std::pow(y, std::pow(y, r)),
                  1.0 / (std::pow(x, r) - std::pow(y, r)));
}
}  // namespace

TEST_CASE("stolarsky anchor values") {
  CHECK(stolarsky({1, 2}, {4, 1}) == doctest::Approx(2.5).epsilon(1e-14));
  CHECK(stolarsky({3, -7}, {3, 3}) == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(stolarsky({0, 0}, {4, 1}) == doctest::Approx(2.0).epsilon(1e-14));
  // E(0,1) = logarithmic mean
  CHECK(stolarsky({0, 1}, {std::exp(1.0), 1.0}) ==
        doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-14));
}

TEST_CASE("stolarsky agrees with the raw branch formulas") {
  for (auto [r, s] : {std::pair{3.0, 5.0}, {-2.0, -1.0}, {0.5, 2.5}}) {
    for (auto [x, y] : {std::pair{2.0, 7.0}, {4.0, 1.0}, {0.3, 5.0}}) {
      const double raw = stolarsky_raw(r, s, x, y);
      CHECK(stolarsky({r, s}, {x, y}) == doctest::Approx(raw).epsilon(1e-12));
    }
  }
  // r = s branch vs the x^{x^r}/y^{y^r} closed form
  for (double r : {1.0, 2.0, -1.5}) {
    CHECK(stolarsky({r, r}, {3.0, 1.0}) ==
          doctest::Approx(stolarsky_rr(r, 3.0, 1.0)).epsilon(1e-12));
  }
  // E(r,0) branch
  const double e10 = std::pow((std::pow(7.0, 2.0) - std::pow(2.0, 2.0)) /
                                  (2.0 * (std::log(7.0) - std::log(2.0))),
                              0.5);
  CHECK(stolarsky({2, 0}, {2, 7}) == doctest::Approx(e10).epsilon(1e-13));
}

TEST_CASE("stolarsky symmetry and mean-value property on random grids") {
  std::mt19937 rng(20240817);
  std::uniform_real_distribution<double> par(-4.0, 4.0);
  std::uniform_real_distribution<double> val(0.2, 9.0);
  for (int i = 0; i < 300; ++i) {
    const double r = par(rng), s = par(rng), x = val(rng), y = val(rng);
    const double e = stolarsky({r, s}, {x, y});
    CHECK(std::abs(e - stolarsky({s, r}, {x, y})) <= 1e-12 * e);
    CHECK(std::abs(e - stolarsky({r, s}, {y, x})) <= 1e-12 * e);
    CHECK(e >= std::min(x, y) * (1.0 - 1e-12));
    CHECK(e <= std::max(x, y) * (1.0 + 1e-12));
  }
}

TEST_CASE("near-degeneracy: tiny parameter gap routes to the limit branch") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> par(-3.0, 3.0);
  for (int i = 0; i < 50; ++i) {
    const double r = par(rng);
    const double limit = stolarsky({r, r}, {4, 1});
    for (double eps : {1e-9, 5e-9, 9.9e-9}) {
      CHECK(std::abs(stolarsky({r, r + eps}, {4, 1}) - limit) <=
            1e-10 * limit);
    }
    // window values stay consistent with the limit as well
    CHECK(std::abs(stolarsky({r, r + 1e-6}, {2, 1}) - stolarsky({r, r}, {2, 1}))
          <= 1e-6);
  }
}

TEST_CASE("named means: anchors") {
  CHECK(mean(MeanKind::harmonic, {4, 1}) ==
        doctest::Approx(1.6).epsilon(1e-15));
  CHECK(mean(MeanKind::logarithmic, {std::exp(1.0), 1.0}) ==
        doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-14));
  CHECK(mean(MeanKind::identric, {3.5, 3.5}) == 3.5);
  CHECK(mean(MeanKind::identric, {2, 1}) ==
        doctest::Approx(4.0 / std::exp(1.0)).epsilon(1e-14));
  CHECK(mean(MeanKind::power, {4, 1}, 2.0) ==
        doctest::Approx(std::sqrt(8.5)).epsilon(1e-14));
  CHECK(mean(MeanKind::power, {4, 1}, 0.0) == 2.0);
}

TEST_CASE("named means match their stolarsky parameterization") {
  struct Row {
    MeanKind kind;
    double r, s, pr;
  };
  const Row rows[] = {
      {MeanKind::arithmetic, 1, 2, 1},   {MeanKind::geometric, 0, 0, 1},
      {MeanKind::harmonic, -2, -1, 1},   {MeanKind::logarithmic, 0, 1, 1},
      {MeanKind::identric, 1, 1, 1},     {MeanKind::power, 1.7, 3.4, 1.7},
      {MeanKind::power, -2.2, -4.4, -2.2}};
  for (const auto& row : rows) {
    for (auto [x, y] : {std::pair{2.0, 7.0}, {4.0, 1.0}, {0.5, 0.50001}}) {
      const MeanPair m{x, y};
      const double lhs = mean(row.kind, m, row.pr);
      const double rhs = stolarsky({row.r, row.s}, m);
      CHECK(std::abs(lhs - rhs) <= 8e-15 * std::abs(lhs));
    }
  }
}

TEST_CASE("mean chain H < G < L < I < A for x != y") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> val(0.1, 20.0);
  for (int i = 0; i < 200; ++i) {
    double x = val(rng), y = val(rng);
    if (x == y) continue;
    const MeanPair m{x, y};
    const double h = mean(MeanKind::harmonic, m);
    const double g = mean(MeanKind::geometric, m);
    const double l = mean(MeanKind::logarithmic, m);
    const double id = mean(MeanKind::identric, m);
    const double a = mean(MeanKind::arithmetic, m);
    CHECK(h < g);
    CHECK(g < l);
    CHECK(l < id);
    CHECK(id < a);
  }
}

TEST_CASE("weighted geometric mean") {
  const WeightedPair w{{4, 1}, 0.5};
  CHECK(weighted_geometric(w, 0.0) == doctest::Approx(2.0).epsilon(1e-15));
  // z -> inf asymptote: G(t) - t -> lambda x + (1-lambda) y
  const double t = 1e8;
  CHECK(std::abs((weighted_geometric(w, t) - t) - 2.5) < 1e-6);

  // lambda-swap symmetry: bit-for-bit whenever 1-lambda round-trips
  // (dyadic lambda), within an ulp otherwise
  for (double lam : {0.25, 0.5, 0.125, 0.8125}) {
    const WeightedPair wa{{2, 1}, lam};
    const WeightedPair wb{{1, 2}, 1.0 - lam};
    for (double tt : {0.0, 0.5, 3.0, -0.9}) {
      CHECK(weighted_geometric(wa, tt) == weighted_geometric(wb, tt));
    }
  }
  const WeightedPair w13{{2, 1}, 1.0 / 3.0};
  const WeightedPair w23{{1, 2}, 1.0 - 1.0 / 3.0};
  for (double tt : {0.0, 0.5, 3.0}) {
    const double va = weighted_geometric(w13, tt);
    const double vb = weighted_geometric(w23, tt);
    CHECK(std::abs(va - vb) <= 4e-16 * va);
  }

  // conjugate symmetry for complex points
  const complex<double> zi(0.0, 1.0);
  const auto up = weighted_geometric(w13, EvalPoint{zi});
  const auto dn = weighted_geometric(w13, EvalPoint{std::conj(zi)});
  CHECK(std::abs(dn - std::conj(up)) < 1e-15);
}

TEST_CASE("weighted arithmetic mean and domain checks") {
  CHECK(weighted_arithmetic({{4, 1}, 0.5}) == 2.5);
  CHECK(weighted_arithmetic({{3, 3}, 0.25}) == 3.0);
  CHECK_THROWS_AS(WeightedPair({4, 1}, 1.0), std::domain_error);
  CHECK_THROWS_AS(WeightedPair({4, 1}, 0.0), std::domain_error);
  CHECK_THROWS_AS(MeanPair(-1.0, 2.0), std::domain_error);
  CHECK_THROWS_AS(MeanPair(1.0, std::nan("")), std::domain_error);
}

TEST_CASE("branch cut rejection") {
  const WeightedPair w{{4, 1}, 0.5};
  CHECK_THROWS_AS(weighted_geometric(w, -1.0), std::domain_error);
  CHECK_THROWS_AS(weighted_geometric(w, EvalPoint{complex<double>(-2.0, 0.0)}),
                  std::domain_error);
  CHECK_NOTHROW(weighted_geometric(w, EvalPoint{complex<double>(-2.0, 0.1)}));
}

TEST_CASE("multivariate means") {
  const PositiveTuple t14({1, 4});
  const PositiveTuple t124({4, 1, 2});  // sorted on construction
  CHECK(gn(t14, 0.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(gn(t124, 0.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(gn(t14, 1.0) == doctest::Approx(std::sqrt(10.0)).epsilon(1e-15));
  CHECK(an(t14) == 2.5);
  CHECK(an(PositiveTuple({1, 2, 3})) == 2.0);
  CHECK(an(PositiveTuple({3.3, 3.3, 3.3})) == doctest::Approx(3.3));
  CHECK_THROWS_AS(PositiveTuple({1.0}), std::domain_error);
  CHECK_THROWS_AS(PositiveTuple({1.0, -2.0}), std::domain_error);
  CHECK_THROWS_AS(gn(t14, -1.0), std::domain_error);

  // n = 2 equals the lambda = 1/2 weighted geometric mean
  const WeightedPair w{{1, 4}, 0.5};
  for (double tt : {0.0, 0.7, 5.0}) {
    CHECK(std::abs(gn(t14, tt) - weighted_geometric(w, tt)) <=
          1e-14 * gn(t14, tt));
  }
  // complex evaluation stays on the principal sheet near the cut
  const EvalPoint p{complex<double>(-0.5, 0.3)};
  const auto v = gn(t14, p);
  const auto vc = gn(t14, EvalPoint{complex<double>(-0.5, -0.3)});
  CHECK(std::abs(vc - std::conj(v)) < 1e-15);
}
