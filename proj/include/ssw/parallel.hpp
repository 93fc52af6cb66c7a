#ifndef SSW_PARALLEL_HPP
#define SSW_PARALLEL_HPP

#include <climits>
#include <exception>

#ifdef SSW_HAVE_OPENMP
#include <omp.h>
#endif

namespace ssw {

/// Runs body(k) for k in [begin, end). Every iteration is independent, so
/// results do not depend on the worker count. If iterations throw, the
/// exception of the lowest k is rethrown.
template <typename Body>
void parallel_for(int begin, int end, Body&& body) {
  std::exception_ptr error;
  int error_index = INT_MAX;
#ifdef SSW_HAVE_OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int k = begin; k < end; ++k) {
    try {
      body(k);
    } catch (...) {
#ifdef SSW_HAVE_OPENMP
#pragma omp critical(ssw_parallel_for_error)
#endif
      {
        if (k < error_index) {
          error_index = k;
          error = std::current_exception();
        }
      }
    }
  }
  if (error) std::rethrow_exception(error);
}

/// Caps the worker count from SSW_THREADS when set to a positive integer.
void configure_threads_from_env();

}  // namespace ssw

#endif  // SSW_PARALLEL_HPP
