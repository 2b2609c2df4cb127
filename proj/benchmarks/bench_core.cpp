#include <benchmark/benchmark.h>

#include "zfr/digamma.hpp"
#include "zfr/prime_sums.hpp"
#include "zfr/primes.hpp"
#include "zfr/trigpoly.hpp"
#include "zfr/zfr_solver.hpp"

static void BM_DigammaRef(benchmark::State& state) {
    const zfr::Complex z(1.2, 3.4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(zfr::digamma_ref(z));
    }
}
BENCHMARK(BM_DigammaRef);

static void BM_PrimeSieve(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(zfr::primes_up_to(state.range(0)));
    }
}
BENCHMARK(BM_PrimeSieve)->Arg(100'000)->Arg(1'000'000);

static void BM_ZetaPrimeSum(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(zfr::zeta_logderiv_prime_sum(2.19, 10'000));
    }
}
BENCHMARK(BM_ZetaPrimeSum);

static void BM_Objective(benchmark::State& state) {
    const zfr::PolyParams params;
    for (auto _ : state) {
        benchmark::DoNotOptimize(zfr::objective(params));
    }
}
BENCHMARK(BM_Objective);

static void BM_ApSweep(benchmark::State& state) {
    const zfr::CosCoeffs coeffs = zfr::cos_coeffs(zfr::PolyParams{});
    const std::vector<double> grid = {1.001, 1.05, 1.1, 1.149};
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            zfr::verify_ap_negative(state.range(0), grid, coeffs));
    }
}
BENCHMARK(BM_ApSweep)->Arg(10'000)->Arg(100'000);

static void BM_RederiveErrorConstant(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            zfr::rederive_error_constant(4, 4, zfr::Regime::t_ge_1));
    }
}
BENCHMARK(BM_RederiveErrorConstant);

BENCHMARK_MAIN();
