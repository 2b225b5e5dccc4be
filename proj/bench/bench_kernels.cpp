// Parallel kernels against their serial twins.
#include <benchmark/benchmark.h>

#include "puiseux/factor.hpp"
#include "puiseux/kernels.hpp"

using namespace puiseux;

namespace {

std::vector<ReducedRational> grid(long count) {
    std::vector<ReducedRational> xs;
    for (long i = 0; static_cast<long>(xs.size()) < count; ++i)
        xs.emplace_back(Rational(1 + i % 997, 1 + i % 120));
    return xs;
}

const MonoidSpec& sample_monoid(int which) {
    static const std::vector<MonoidSpec> ms{
        MonoidSpec::finitely_generated({ReducedRational(Rational(7, 12)), ReducedRational(Rational(9, 10)),
                                        ReducedRational(Rational(11, 8))}),
        MonoidSpec::prime_power_pair(2, 3),
        MonoidSpec::prime_reciprocal({{1, 2}, {1, 3}, {2, 5}}, true),
    };
    return ms[static_cast<std::size_t>(which)];
}

void BM_contains_parallel(benchmark::State& state) {
    const auto xs = grid(state.range(1));
    const MonoidSpec& m = sample_monoid(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::contains_batch(m, xs));
    state.SetItemsProcessed(state.iterations() * state.range(1));
}

void BM_contains_serial(benchmark::State& state) {
    const auto xs = grid(state.range(1));
    const MonoidSpec& m = sample_monoid(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::contains_batch_serial(m, xs));
    state.SetItemsProcessed(state.iterations() * state.range(1));
}

// 0: Swinnerton-Dyer polynomial for sqrt 2, 3, 5 (splits modulo every prime)
// 1: X^48 - 1
// 2: (X^4 + 1)(X^8 - 40X^6 + 352X^4 - 960X^2 + 576)
IntegerPolynomial sample_poly(int which) {
    const IntegerPolynomial sd(std::vector<BigInt>{576, 0, -960, 0, 352, 0, -40, 0, 1});
    if (which == 0) return sd;
    if (which == 1) {
        std::vector<BigInt> c(49, 0);
        c.front() = -1;
        c.back() = 1;
        return IntegerPolynomial(std::move(c));
    }
    return sd * IntegerPolynomial(std::vector<BigInt>{1, 0, 0, 0, 1});
}

void recombine(benchmark::State& state, bool parallel) {
    const IntegerPolynomial f = sample_poly(static_cast<int>(state.range(0)));
    IntFactorOptions o;
    o.parallel_recombination = parallel;
    for (auto _ : state) benchmark::DoNotOptimize(factor_over_integers(f, o));
}

void BM_factor_parallel(benchmark::State& state) { recombine(state, true); }
void BM_factor_serial(benchmark::State& state) { recombine(state, false); }

} // namespace

BENCHMARK(BM_contains_parallel)->ArgsProduct({{0, 1, 2}, {1 << 12, 1 << 16}});
BENCHMARK(BM_contains_serial)->ArgsProduct({{0, 1, 2}, {1 << 12, 1 << 16}});
BENCHMARK(BM_factor_parallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_factor_serial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
