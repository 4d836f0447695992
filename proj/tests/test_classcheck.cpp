#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "meanforge/classcheck.hpp"
#include "meanforge/means.hpp"

using namespace meanforge;
using namespace meanforge::classcheck;

namespace {

const std::vector<double> kGrid{0.3, 0.7, 1.2, 2.0, 3.5, 5.0};

FunctionHandle plain(std::string name, std::function<double(double)> f,
                     double lo = 0.0) {
  FunctionHandle h;
  h.name = std::move(name);
  h.evaluator = std::move(f);
  h.domain = {lo, 1e12};
  return h;
}

}  // namespace

TEST_CASE("cm_check: canonical member and non-member") {
  auto pass = cm_check(plain("exp-neg", [](double t) { return std::exp(-t); }),
                       8, kGrid, 1e-2);
  CHECK(pass.pass);
  CHECK(pass.worst_margin >= -1e-9);

  auto fail =
      cm_check(plain("identity", [](double t) { return t; }), 2, kGrid, 1e-2);
  CHECK(!fail.pass);
  CHECK(!fail.inconclusive);
  CHECK(fail.witness.order == 1);  // Delta f > 0 breaks CM at k = 1
  CHECK(fail.worst_margin < -1e-3);
}

TEST_CASE("cm_check: h_alpha member via values and exact derivatives") {
  FunctionHandle h;
  h.name = "h-alpha(0.5)";
  h.evaluator = [](double t) { return std::pow(1.0 + 1.0 / t, 0.5); };
  h.domain = {0.0, 1e12};
  auto v = cm_check(h, 8, kGrid, 1e-2);
  CHECK(v.pass);
}

TEST_CASE("bernstein_check: shifted means pass, decaying exponential fails") {
  auto l = bernstein_check(
      plain("l-shift(2,1)",
            [](double t) {
              return means::mean(means::MeanKind::logarithmic,
                                 {2 + t, 1 + t});
            },
            -1.0),
      8, kGrid, 1e-2);
  CHECK(l.pass);

  auto a = bernstein_check(plain("a-shift", [](double t) { return 1.5 + t; }),
                           8, kGrid, 1e-2);
  CHECK(a.pass);

  auto e = bernstein_check(
      plain("exp-neg", [](double t) { return std::exp(-t); }), 4, kGrid, 1e-2);
  CHECK(!e.pass);
  CHECK(!e.inconclusive);
}

TEST_CASE("lcm_check: reciprocals of Bernstein functions") {
  auto r = lcm_check(
      plain("recip-linear", [](double t) { return 1.0 / (1.0 + t); }), 8,
      kGrid, 1e-2);
  CHECK(r.pass);

  auto w = lcm_check(plain("recip-g-weighted",
                           [](double t) {
                             return 1.0 / means::weighted_geometric(
                                              {{2, 1}, 1.0 / 3.0}, t);
                           },
                           -1.0),
                     8, kGrid, 1e-2);
  CHECK(w.pass);

  auto e = lcm_check(plain("exp", [](double t) { return std::exp(t); }), 4,
                     kGrid, 1e-2);
  CHECK(!e.pass);
  CHECK(e.witness.order == 1);
}

TEST_CASE("order stability and step robustness") {
  auto handle = plain("h-shift", [](double t) {
    return means::mean(means::MeanKind::harmonic, {2 + t, 1 + t});
  });
  for (double step : {1e-2, 1e-3}) {
    bool prev_pass = true;
    for (int order : {2, 4, 8}) {
      auto v = bernstein_check(handle, order, kGrid, step);
      CHECK(v.pass);
      // a pass at high order implies a pass at every lower order
      CHECK(v.pass == prev_pass);
      prev_pass = v.pass;
    }
  }
}

TEST_CASE("cm_order_check: first-order CM of the identric shift") {
  auto handle = plain("i-shift(2,1)", [](double t) {
    return means::mean(means::MeanKind::identric, {2 + t, 1 + t});
  });
  auto v = cm_order_check(handle, 1, 8, kGrid, 1e-2);
  CHECK(v.pass);
  // zeroth order (the function itself) is not CM: it increases
  auto v0 = cm_check(handle, 2, kGrid, 1e-2);
  CHECK(!v0.pass);
}

TEST_CASE("stieltjes density check") {
  CHECK(stieltjes_density_check(0.5).pass);
  CHECK(stieltjes_density_check(0.9).pass);
  CHECK_THROWS_AS(stieltjes_density_check(-0.5), std::domain_error);
}

TEST_CASE("grid escaping the domain is rejected") {
  auto handle = plain("exp-neg", [](double t) { return std::exp(-t); });
  CHECK_THROWS_AS(cm_check(handle, 4, {-1.0, 0.5}, 1e-2), std::domain_error);
  CHECK_THROWS_AS(cm_check(handle, 4, kGrid, 0.0), std::domain_error);
}

TEST_CASE("standard corpus: all claims hold, negative controls fail") {
  const auto corpus = standard_corpus();
  const auto verdicts = run_corpus(corpus, 8, 1e-2);
  REQUIRE(verdicts.size() == corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    INFO(corpus[i].handle.name, " as ", corpus[i].class_name);
    if (corpus[i].expect_pass) {
      CHECK(verdicts[i].pass);
    } else {
      CHECK(!verdicts[i].pass);
      CHECK(!verdicts[i].inconclusive);
      CHECK(std::isfinite(verdicts[i].witness.t));
    }
  }
}
