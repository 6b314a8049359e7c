#ifndef XGS_PARALLEL_HPP
#define XGS_PARALLEL_HPP

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace xgs {

// Execution policy for grid sweeps.  Exec::serial is the reference path kept
// for testing; Exec::par distributes iterations over OpenMP threads.  Every
// sweep writes into a pre-sized slot per index and reduces serially
// afterwards, so both paths produce bit-identical results.
enum class Exec { serial, par };

template <class F>
void for_index(std::size_t n, F&& f, Exec exec = Exec::par) {
#ifdef _OPENMP
  if (exec == Exec::par) {
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      f(static_cast<std::size_t>(i));
    }
    return;
  }
#else
  (void)exec;
#endif
  for (std::size_t i = 0; i < n; ++i) f(i);
}

}  // namespace xgs

#endif
