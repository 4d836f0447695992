#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "meanforge/kernels.hpp"
#include "meanforge/representations.hpp"
#include "meanforge/sweep.hpp"

using namespace meanforge;

TEST_CASE("parallel sweep is bit-identical to the serial reference") {
  std::vector<double> svals;
  for (int i = 1; i <= 48; ++i) svals.push_back(0.05 * i);

  auto kernel_row = [](double s) {
    return kernels::f_kernel(0.35, s).value;
  };
  const auto serial = sweep<double>(svals, kernel_row, ExecPolicy::serial);
  const auto parallel = sweep<double>(svals, kernel_row, ExecPolicy::parallel);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i] == parallel[i]);  // exact, not approximate
  }
}

TEST_CASE("residual-report rows keep input order under parallelism") {
  std::vector<double> zs{0.1, 0.7, 1.3, 2.9, 4.2, 8.0};
  auto row = [](double z) {
    return repr::h_alpha_repr(0.3, z).rel_residual;
  };
  const auto a = sweep<double>(zs, row, ExecPolicy::serial);
  const auto b = sweep<double>(zs, row, ExecPolicy::parallel);
  for (std::size_t i = 0; i < zs.size(); ++i) {
    CHECK(a[i] == b[i]);
    CHECK(a[i] <= 1e-8);
  }
}

TEST_CASE("exceptions inside parallel rows propagate") {
  std::vector<int> rows{0, 1, 2, 3, 4, 5, 6, 7};
  auto boom = [](int i) -> int {
    if (i == 5) throw std::runtime_error("row failure");
    return i * i;
  };
  CHECK_THROWS_AS(sweep<int>(rows, boom, ExecPolicy::parallel),
                  std::runtime_error);
  CHECK_THROWS_AS(sweep<int>(rows, boom, ExecPolicy::serial),
                  std::runtime_error);
}

TEST_CASE("empty input yields empty output") {
  const std::vector<double> none;
  auto id = [](double v) { return v; };
  CHECK(sweep<double>(none, id, ExecPolicy::parallel).empty());
}
