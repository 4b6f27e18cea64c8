#pragma once
#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace richelot {

// Runs fn(i) for i in [0, n).  jobs == 1 uses the plain serial loop (the
// reference path used by the unit tests); jobs > 1 dispatches via OpenMP when
// available.  Callers write results into per-index slots so both paths
// produce identical output.
template <typename Fn>
void parallel_for(std::size_t n, int jobs, Fn&& fn) {
#ifdef _OPENMP
    if (jobs > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            fn(static_cast<std::size_t>(i));
        return;
    }
#endif
    (void)jobs;
    for (std::size_t i = 0; i < n; ++i) fn(i);
}

inline int hardware_jobs() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace richelot
