#pragma once

// Include this instead of <omp.h> so the library still builds without OpenMP.

#if defined(_OPENMP)
#include <omp.h>
namespace tcconf {
inline constexpr bool kHaveOpenMP = true;
}  // namespace tcconf
#else
namespace tcconf {
inline constexpr bool kHaveOpenMP = false;
}  // namespace tcconf
inline int omp_get_thread_num() { return 0; }
inline int omp_get_max_threads() { return 1; }
inline int omp_get_num_threads() { return 1; }
inline void omp_set_num_threads(int) {}
inline double omp_get_wtime() { return 0.0; }
#endif

namespace tcconf {

/// Selects between the OpenMP kernels and the serial reference kernels.
/// Both produce identical, canonically ordered output.
enum class Execution { Serial, Parallel };

}  // namespace tcconf
