#pragma once

#include <cstddef>

namespace contact {

// Execution backend for lattice-wide kernels and replica batches.  The serial
// path is the reference implementation; tests assert the OpenMP path produces
// identical results and the bench target compares their throughput.
enum class Backend { serial, openmp };

template <class F>
void map_lattice(std::size_t count, Backend backend, F&& body) {
    if (backend == Backend::openmp) {
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < static_cast<long long>(count); ++i)
            body(static_cast<std::size_t>(i));
    } else {
        for (std::size_t i = 0; i < count; ++i) body(i);
    }
}

}  // namespace contact
