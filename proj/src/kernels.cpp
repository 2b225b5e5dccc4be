#include "puiseux/kernels.hpp"

namespace puiseux::kernels {

std::vector<std::uint8_t> contains_batch(const MonoidSpec& m, std::span<const ReducedRational> xs) {
    std::vector<std::uint8_t> out(xs.size());
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(xs.size()); ++i) {
        try {
            out[static_cast<std::size_t>(i)] = contains(m, xs[static_cast<std::size_t>(i)]) ? 1 : 0;
        } catch (...) {
#pragma omp critical(puiseux_batch_error)
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    return out;
}

std::vector<std::uint8_t> contains_batch_serial(const MonoidSpec& m, std::span<const ReducedRational> xs) {
    std::vector<std::uint8_t> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(contains(m, x) ? 1 : 0);
    return out;
}

} // namespace puiseux::kernels
