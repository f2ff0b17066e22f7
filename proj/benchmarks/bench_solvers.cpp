#include <benchmark/benchmark.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "rsp/dp.hpp"
#include "rsp/fptas.hpp"
#include "rsp/model.hpp"
#include "rsp/oracle.hpp"
#include "rsp/prng.hpp"
#include "rsp/rational.hpp"

namespace {

rsp::instance family(int n, int cycle, std::int64_t max_size) {
    rsp::splitmix64 rng(0xBE9C + static_cast<std::uint64_t>(n * 100 + cycle));
    std::vector<rsp::item> items;
    items.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        items.push_back(rsp::item{
            cycle, 1 + static_cast<std::int64_t>(rng.bounded(
                       static_cast<std::uint64_t>(max_size)))});
    }
    return rsp::instance::make(items);
}

void BM_exact_solve(benchmark::State& state) {
    const rsp::instance inst =
        family(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 20);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rsp::solve_exact(inst).peak);
    }
    state.counters["states"] = static_cast<double>(
        rsp::solve_exact(inst).solution.stats.states_visited);
}
BENCHMARK(BM_exact_solve)
    ->Args({4, 2})
    ->Args({8, 2})
    ->Args({12, 2})
    ->Args({4, 3})
    ->Args({8, 3})
    ->Args({4, 6})
    ->Args({6, 6});

// Accuracy sweep at fixed n and k; sizes are large so the scaled state count,
// not the raw sizes, is what the run time tracks.
void BM_fptas_solve(benchmark::State& state) {
    static const rsp::rational eps_primes[] = {
        rsp::rational(2), rsp::rational(1), rsp::rational(1, 2), rsp::rational(1, 5),
        rsp::rational(1, 10)};
    const rsp::rational& eps_prime = eps_primes[state.range(0)];
    const rsp::instance inst = family(5, 6, 1'000'000);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rsp::solve_fptas(inst, eps_prime).value);
    }
    state.counters["states"] = static_cast<double>(
        rsp::solve_fptas(inst, eps_prime).stats.states_visited);
}
BENCHMARK(BM_fptas_solve)->DenseRange(0, 4);

void BM_oracle(benchmark::State& state) {
    const rsp::instance inst = family(static_cast<int>(state.range(0)), 4, 20);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rsp::brute_force_optimum(inst).best_peak);
    }
}
BENCHMARK(BM_oracle)->Arg(4)->Arg(6);

void BM_rational_reduce(benchmark::State& state) {
    for (auto _ : state) {
        rsp::rational sum;
        for (std::int64_t i = 1; i <= 64; ++i) {
            sum += rsp::rational(i, i + 1);
        }
        benchmark::DoNotOptimize(sum);
    }
}
BENCHMARK(BM_rational_reduce);

}  // namespace

BENCHMARK_MAIN();
