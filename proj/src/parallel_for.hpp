#pragma once

#include <cstdint>
#include <exception>

#include "relbell/execution.hpp"

namespace relbell::detail {

/// Runs body(i) for i in [0, n). Exceptions thrown inside the OpenMP region
/// are captured and the one from the lowest index is rethrown.
template <class Body>
void parallel_for(std::int64_t n, Execution exec, Body&& body)
{
    if (exec == Execution::serial) {
        for (std::int64_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::exception_ptr error;
    std::int64_t error_index = n;
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < n; ++i) {
        try {
            body(i);
        } catch (...) {
#pragma omp critical(relbell_parallel_for_error)
            if (i < error_index) {
                error_index = i;
                error = std::current_exception();
            }
        }
    }
    if (error) std::rethrow_exception(error);
}

} // namespace relbell::detail
