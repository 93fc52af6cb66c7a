#include "ssw/parallel.hpp"

#include <cstdlib>
#include <string>

namespace ssw {

void configure_threads_from_env() {
  const char* env = std::getenv("SSW_THREADS");
  if (!env) return;
  int n = 0;
  try {
    n = std::stoi(env);
  } catch (...) {
    return;
  }
  if (n <= 0) return;
#ifdef SSW_HAVE_OPENMP
  if (n < omp_get_max_threads()) omp_set_num_threads(n);
#endif
}

}  // namespace ssw
