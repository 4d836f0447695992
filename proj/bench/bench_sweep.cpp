// Timing harness comparing the serial reference sweep with the
// OpenMP-parallel one on representative kernel workloads.
#include <chrono>
#include <cstdio>
#include <vector>

#include "meanforge/kernels.hpp"
#include "meanforge/representations.hpp"
#include "meanforge/sweep.hpp"

using namespace meanforge;
using Clock = std::chrono::steady_clock;

namespace {

template <class Fn>
double time_ms(Fn&& fn) {
  const auto t0 = Clock::now();
  fn();
  const auto t1 = Clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

template <class In, class Row>
void bench_case(const char* name, const std::vector<In>& inputs, Row row) {
  // warm once so lazy tables and page faults stay out of the timing
  volatile double sink = row(inputs.front());
  (void)sink;

  double checksum_serial = 0.0, checksum_parallel = 0.0;
  const double serial_ms = time_ms([&] {
    for (double v : sweep<double>(inputs, row, ExecPolicy::serial)) {
      checksum_serial += v;
    }
  });
  const double parallel_ms = time_ms([&] {
    for (double v : sweep<double>(inputs, row, ExecPolicy::parallel)) {
      checksum_parallel += v;
    }
  });
  std::printf("%-28s rows=%5zu serial=%9.2f ms  parallel=%9.2f ms  "
              "speedup=%5.2fx  identical=%s\n",
              name, inputs.size(), serial_ms, parallel_ms,
              serial_ms / parallel_ms,
              checksum_serial == checksum_parallel ? "yes" : "NO");
}

}  // namespace

int main() {
  std::printf("threads available: %d\n", sweep_threads());

  {
    std::vector<double> grid;
    for (int i = 0; i < 19; ++i) {
      for (int j = 0; j < 24; ++j) {
        grid.push_back(0.05 + 0.05 * i + 1e-3 * j);
      }
    }
    bench_case("F positivity grid", grid, [](double lam) {
      double acc = 0.0;
      for (double s : {0.1, 1.0, 10.0, 50.0}) {
        acc += kernels::f_kernel(lam, s).value;
      }
      return acc;
    });
  }
  {
    std::vector<double> svals;
    for (int i = 1; i <= 400; ++i) svals.push_back(0.02 * i);
    bench_case("P kernel (fast) s-grid", svals, [](double s) {
      return kernels::p_kernel({2, 1}, s).value;
    });
  }
  {
    std::vector<double> zs;
    for (int i = 1; i <= 64; ++i) zs.push_back(0.1 * i);
    bench_case("weighted-geometric residuals", zs, [](double z) {
      return repr::weighted_geometric_repr({{2, 1}, 0.3}, z).rel_residual;
    });
  }
  return 0;
}
