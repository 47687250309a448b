// Benchmarks comparing the serial reference kernels against the OpenMP
// variants, plus the two class-sum arithmetic paths.

#include <benchmark/benchmark.h>

#include "kron/cayley.hpp"
#include "kron/charkron.hpp"
#include "kron/cube.hpp"
#include "kron/latin.hpp"

using namespace kron;

namespace {

CubeSet doubled_cube() {
    CubeSet full = full_cube(Cube(3, 2));
    return direct_sum(full, full);
}

PartitionTuple rect(int n, int k, int d) {
    std::vector<Partition> e(d, Partition(std::vector<int>(n, k)));
    return PartitionTuple(std::move(e));
}

void BM_at_serial(benchmark::State& state) {
    CubeSet t = doubled_cube();
    for (auto _ : state) {
        SignedCount sc = at_number_serial(t);
        benchmark::DoNotOptimize(sc.positive);
    }
}
BENCHMARK(BM_at_serial)->Unit(benchmark::kMillisecond);

void BM_at_omp(benchmark::State& state) {
    CubeSet t = doubled_cube();
    for (auto _ : state) {
        SignedCount sc = at_number(t);
        benchmark::DoNotOptimize(sc.positive);
    }
}
BENCHMARK(BM_at_omp)->Unit(benchmark::kMillisecond);

void BM_class_sum_serial(benchmark::State& state) {
    PartitionTuple t = rect(static_cast<int>(state.range(0)), 4, 3);
    for (auto _ : state) {
        Int g = kronecker_class_sum_modular_serial(t);
        benchmark::DoNotOptimize(g);
    }
}
BENCHMARK(BM_class_sum_serial)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_class_sum_omp(benchmark::State& state) {
    PartitionTuple t = rect(static_cast<int>(state.range(0)), 4, 3);
    for (auto _ : state) {
        Int g = kronecker_class_sum_modular(t);
        benchmark::DoNotOptimize(g);
    }
}
BENCHMARK(BM_class_sum_omp)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_class_sum_exact(benchmark::State& state) {
    PartitionTuple t = rect(static_cast<int>(state.range(0)), 4, 3);
    for (auto _ : state) {
        Int g = kronecker_characters_exact(t);
        benchmark::DoNotOptimize(g);
    }
}
BENCHMARK(BM_class_sum_exact)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_magic_count(benchmark::State& state) {
    for (auto _ : state) {
        Int c = count_magic_sets(3, 3, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_magic_count)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_omega_square_k4(benchmark::State& state) {
    for (auto _ : state) {
        Multivector p = omega_power(3, 4, 2);
        benchmark::DoNotOptimize(p.num_terms());
    }
}
BENCHMARK(BM_omega_square_k4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
