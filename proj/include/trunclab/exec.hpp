// exec.hpp -- serial / OpenMP execution of independent row computations.
//
// Every report builder computes rows that are independent per index and
// writes results into a pre-sized vector, so output is identical (bitwise)
// for both modes and for any thread count.
#pragma once

#include <cstddef>
#include <exception>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace trunclab {

enum class ExecMode { serial, openmp };

// Runs fn(i) for i in [0, count), possibly in parallel.  Exceptions from
// worker iterations are captured and rethrown on the calling thread.
template <typename Fn>
void for_each_index(std::size_t count, ExecMode mode, Fn&& fn) {
    if (mode == ExecMode::serial) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::exception_ptr first_error = nullptr;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long i = 0; i < static_cast<long>(count); ++i) {
        try {
            fn(static_cast<std::size_t>(i));
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical(trunclab_for_each_index_error)
#endif
            {
                if (!first_error) first_error = std::current_exception();
            }
        }
    }
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace trunclab
