#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace eulerref {

/// Selects between the OpenMP kernel and its serial reference.
enum class Exec { serial, parallel };

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace eulerref
