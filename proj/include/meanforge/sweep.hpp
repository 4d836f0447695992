#ifndef MEANFORGE_SWEEP_HPP
#define MEANFORGE_SWEEP_HPP

#include <cstddef>
#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

/// Row-parallel evaluation of independent work items.  All library
/// operations are pure, so parallel execution produces bit-identical
/// output to the serial reference; output order always follows input
/// order regardless of scheduling.
namespace meanforge {

enum class ExecPolicy { serial, parallel };

template <class Out, class In, class Fn>
std::vector<Out> sweep(const std::vector<In>& inputs, Fn&& fn,
                       ExecPolicy policy = ExecPolicy::serial) {
  std::vector<Out> out(inputs.size());
  if (policy == ExecPolicy::serial) {
    for (std::size_t i = 0; i < inputs.size(); ++i) out[i] = fn(inputs[i]);
    return out;
  }

  std::exception_ptr first_error = nullptr;
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(inputs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = fn(inputs[static_cast<std::size_t>(i)]);
    } catch (...) {
#pragma omp critical(meanforge_sweep_error)
      {
        if (!first_error) first_error = std::current_exception();
      }
    }
  }
  if (first_error) std::rethrow_exception(first_error);
  return out;
}

inline int sweep_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline void set_sweep_threads(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

}  // namespace meanforge

#endif  // MEANFORGE_SWEEP_HPP
