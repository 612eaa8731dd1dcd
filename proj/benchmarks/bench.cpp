#include "mdet/discriminant.hpp"
#include "mdet/matroid.hpp"
#include "mdet/rng.hpp"
#include "mdet/tropical.hpp"
#include "mdet/weyl.hpp"

#include <benchmark/benchmark.h>

using namespace mdet;

namespace {

QMat random_matrix(std::uint64_t seed, std::size_t r, std::size_t c) {
    Rng rng(seed);
    QMat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rng.next_rational(-50, 50);
    return m;
}

void BM_RankDense(benchmark::State& state) {
    QMat m = random_matrix(1, 20, 20);
    for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankDense);

void BM_KernelBasis(benchmark::State& state) {
    QMat m = random_matrix(2, 8, 16);
    for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(m));
}
BENCHMARK(BM_KernelBasis);

void BM_FlatsUniform(benchmark::State& state) {
    for (auto _ : state) {
        Matroid m(uniform_realization(static_cast<int>(state.range(0)), 2));
        benchmark::DoNotOptimize(m.flats().flats.size());
    }
}
BENCHMARK(BM_FlatsUniform)->Arg(5)->Arg(7);

void BM_CharacteristicPolynomial(benchmark::State& state) {
    for (auto _ : state) {
        Matroid m(uniform_realization(static_cast<int>(state.range(0)), 3));
        benchmark::DoNotOptimize(m.characteristic_polynomial());
    }
}
BENCHMARK(BM_CharacteristicPolynomial)->Arg(7)->Arg(9);

void BM_UniformDegree(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(uniform_discriminant_degree(static_cast<int>(state.range(0)), 3));
}
BENCHMARK(BM_UniformDegree)->Arg(6)->Arg(8);

void BM_DefectivitySample(benchmark::State& state) {
    QMat banana = banana_matrix(3);
    std::uint64_t seed = 0;
    for (auto _ : state) benchmark::DoNotOptimize(is_dual_defective(banana, 4, seed++));
}
BENCHMARK(BM_DefectivitySample);

void BM_LauricellaOrder(benchmark::State& state) {
    Parameters prm = parameters_from_u({Rat(1) / 2, Rat(1) / 3, Rat(1) / 5, Rat(1) / 7}, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(lauricella_series(3, prm, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_LauricellaOrder)->Arg(6)->Arg(10);

void BM_AnnihilationCheck(benchmark::State& state) {
    Parameters prm = parameters_from_u({Rat(1) / 2, Rat(1) / 3, Rat(1) / 5, Rat(1) / 7}, 2);
    Matroid m(banana_matrix(3));
    MatroidSystem sys = build_system(m, prm);
    std::vector<WeylOp> ops;
    ops.push_back(sys.euler);
    for (const WeylOp& p : sys.toral) ops.push_back(p);
    for (const WeylOp& q : sys.circuit) ops.push_back(q);
    GenSeries g = lauricella_series(3, prm, 8);
    for (auto _ : state) benchmark::DoNotOptimize(annihilation_check(ops, g, 8));
}
BENCHMARK(BM_AnnihilationCheck);

}  // namespace

BENCHMARK_MAIN();
