#pragma once

#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fomcert {

// Thread count used by the OpenMP kernels. 0 = runtime default.
// Results never depend on this: every parallel loop writes to a slot
// indexed by the input position, so output order is fixed.
inline int& worker_threads() {
    static int n = 0;
    return n;
}

inline int effective_threads() {
#ifdef _OPENMP
    int n = worker_threads();
    return n > 0 ? n : omp_get_max_threads();
#else
    return 1;
#endif
}

// Indexed parallel map: out[i] = fn(i) for i in [0, n).
template <class T, class Fn>
std::vector<T> par_map(std::size_t n, Fn&& fn) {
    std::vector<T> out(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(effective_threads())
#endif
    for (long i = 0; i < static_cast<long>(n); ++i)
        out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    return out;
}

// Serial reference for the same contract, kept for testing and benchmarks.
template <class T, class Fn>
std::vector<T> serial_map(std::size_t n, Fn&& fn) {
    std::vector<T> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
}

} // namespace fomcert
