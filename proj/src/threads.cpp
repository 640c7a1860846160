#include "trotterkit/threads.hpp"

#include <cstdlib>
#include <string>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace trotterkit {

void init_threads_from_env() {
#if defined(_OPENMP)
    const char* env = std::getenv("TROTTERKIT_THREADS");
    if (env == nullptr) return;
    try {
        const int n = std::stoi(env);
        if (n > 0) omp_set_num_threads(n);
    } catch (const std::exception&) {
        // unparsable value: keep the hardware default
    }
#endif
}

int worker_thread_count() {
#if defined(_OPENMP)
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace trotterkit
