#ifndef PUISEUX_KERNELS_HPP
#define PUISEUX_KERNELS_HPP

// Data-parallel kernels. Every OpenMP kernel has a serial twin with the same
// contract; the tests compare the two and the benchmark times them.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <optional>
#include <span>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "puiseux/monoid.hpp"

namespace puiseux::kernels {

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

/// Smallest i < n with pred(i), scanning in order.
template <class Pred>
std::optional<std::size_t> find_first_serial(std::size_t n, Pred&& pred) {
    for (std::size_t i = 0; i < n; ++i)
        if (pred(i)) return i;
    return std::nullopt;
}

/// Smallest i < n with pred(i). Every index is evaluated in parallel, so the
/// answer is the same as the serial scan regardless of scheduling. `pred`
/// must be safe to call concurrently; the first exception is rethrown.
template <class Pred>
std::optional<std::size_t> find_first(std::size_t n, Pred&& pred) {
    std::size_t best = n;
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1) reduction(min : best)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
        try {
            if (pred(static_cast<std::size_t>(i))) best = std::min(best, static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(puiseux_kernel_error)
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    if (best == n) return std::nullopt;
    return best;
}

/// Membership for many elements at once (1 = member).
std::vector<std::uint8_t> contains_batch(const MonoidSpec& m, std::span<const ReducedRational> xs);
std::vector<std::uint8_t> contains_batch_serial(const MonoidSpec& m, std::span<const ReducedRational> xs);

} // namespace puiseux::kernels

#endif
