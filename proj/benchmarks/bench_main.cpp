#include <benchmark/benchmark.h>

#include <random>

#include "qcorr/channels.hpp"
#include "qcorr/correlations.hpp"
#include "qcorr/dynamics.hpp"
#include "qcorr/linalg.hpp"
#include "qcorr/states.hpp"

using namespace qcorr;

namespace {

ComplexMatrix random_hermitian(std::mt19937_64& rng, std::size_t n) {
    ComplexMatrix a(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            a(r, c) = Complex{2.0 * ((rng() >> 11) * 0x1.0p-53) - 1.0,
                              2.0 * ((rng() >> 11) * 0x1.0p-53) - 1.0};
    ComplexMatrix h = a + a.adjoint();
    h *= 0.5;
    for (std::size_t r = 0; r < n; ++r) {
        h(r, r) = h(r, r).real();
        for (std::size_t c = r + 1; c < n; ++c) h(c, r) = std::conj(h(r, c));
    }
    return h;
}

void BM_HermitianEigen(benchmark::State& state) {
    std::mt19937_64 rng(7);
    const ComplexMatrix h = random_hermitian(rng, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(hermitian_eigen(h));
    }
}
BENCHMARK(BM_HermitianEigen)->Arg(2)->Arg(3)->Arg(6);

void BM_HermitianEigenvaluesOnly(benchmark::State& state) {
    std::mt19937_64 rng(7);
    const ComplexMatrix h = random_hermitian(rng, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(hermitian_eigenvalues(h));
    }
}
BENCHMARK(BM_HermitianEigenvaluesOnly)->Arg(3)->Arg(6);

void BM_EvolveClosedForm(benchmark::State& state) {
    const DensityMatrix rho0 = family_state(0.15);
    for (auto _ : state) {
        benchmark::DoNotOptimize(evolve_closed_form(rho0, 0.5));
    }
}
BENCHMARK(BM_EvolveClosedForm);

void BM_ApplyLiftedChannel(benchmark::State& state) {
    const DensityMatrix rho0 = family_state(0.15);
    const KrausChannel lifted =
        lift_to_composite(qutrit_dephasing_gamma_t(1.0), rho0.index());
    for (auto _ : state) {
        benchmark::DoNotOptimize(apply(lifted, rho0));
    }
}
BENCHMARK(BM_ApplyLiftedChannel);

void BM_ConditionalEntropy(benchmark::State& state) {
    const DensityMatrix rho = evolve_closed_form(family_state(0.15), 0.5);
    const MeasurementSetting s(1.1, 2.2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(measured_conditional_entropy(rho, s));
    }
}
BENCHMARK(BM_ConditionalEntropy);

void BM_Negativity(benchmark::State& state) {
    const DensityMatrix rho = evolve_closed_form(family_state(0.15), 0.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(negativity(rho));
    }
}
BENCHMARK(BM_Negativity);

void BM_DiscordDefaultOptimizer(benchmark::State& state) {
    const DensityMatrix rho = evolve_closed_form(family_state(0.23), 0.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(discord(rho));
    }
}
BENCHMARK(BM_DiscordDefaultOptimizer);

void BM_TrajectoryPoint(benchmark::State& state) {
    // One full grid point: evolve + all four correlation quantities.
    const DensityMatrix rho0 = family_state(0.15);
    for (auto _ : state) {
        const DensityMatrix evolved = evolve_closed_form(rho0, 0.7);
        benchmark::DoNotOptimize(discord(evolved));
    }
}
BENCHMARK(BM_TrajectoryPoint);

} // namespace

BENCHMARK_MAIN();
