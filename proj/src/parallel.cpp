#include "hsi/parallel.hpp"

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hsi {

int worker_count() {
    if (const char* env = std::getenv("HSI_THREADS")) {
        const int requested = std::atoi(env);
        if (requested > 0) return requested;
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace hsi
