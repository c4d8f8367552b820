#include <benchmark/benchmark.h>

#include "seirs/endemic.hpp"
#include "seirs/ode.hpp"
#include "seirs/reproduction.hpp"

namespace {

seirs::ModelParams forced(double beta, double b)
{
    seirs::ModelParams p;
    p.omega = 1.0;
    p.Lambda = seirs::PeriodicCoefficient(2.0, 1.0);
    p.mu = seirs::PeriodicCoefficient(2.0, 1.0);
    std::vector<seirs::Harmonic> harmonics;
    if (b != 0.0) harmonics.push_back({beta * b, 1, 0.0});
    p.beta = seirs::PeriodicCoefficient(beta, std::move(harmonics), 1.0);
    p.eta = seirs::PeriodicCoefficient(0.0, 1.0);
    p.epsilon = seirs::PeriodicCoefficient(1.0, 1.0);
    p.gamma = seirs::PeriodicCoefficient(0.02, 1.0);
    return p;
}

void BM_VectorField(benchmark::State& state)
{
    auto params = forced(6.9, 0.6);
    auto inc = seirs::IncidenceSpec::mass_action();
    seirs::StateVec x{0.1, 0.1, 0.1, 0.1};
    double t = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(seirs::vector_field(params, inc, t, x));
        t += 1e-3;
    }
}
BENCHMARK(BM_VectorField);

void BM_SimulateOnePeriod(benchmark::State& state)
{
    auto params = forced(6.9, 0.6);
    auto inc = seirs::IncidenceSpec::mass_action();
    for (auto _ : state) {
        benchmark::DoNotOptimize(seirs::simulate(params, inc, {0.1, 0.1, 0.1, 0.1}, 0.0, 1.0));
    }
}
BENCHMARK(BM_SimulateOnePeriod);

void BM_ThresholdRho(benchmark::State& state)
{
    auto params = forced(6.9, 0.6);
    auto inc = seirs::IncidenceSpec::mass_action();
    for (auto _ : state) {
        benchmark::DoNotOptimize(seirs::threshold_rho(params, inc));
    }
}
BENCHMARK(BM_ThresholdRho);

void BM_ReproductionRatio(benchmark::State& state)
{
    auto params = forced(6.9, 0.6);
    auto inc = seirs::IncidenceSpec::mass_action();
    for (auto _ : state) {
        benchmark::DoNotOptimize(seirs::r0_wang_zhao(params, inc));
    }
}
BENCHMARK(BM_ReproductionRatio);

void BM_OrbitShooting(benchmark::State& state)
{
    auto params = forced(6.9, 0.6);
    auto inc = seirs::IncidenceSpec::mass_action();
    seirs::StateVec settled = seirs::flow(params, inc, {0.1, 0.1, 0.1, 0.1}, 0.0, 200.0);
    for (auto _ : state) {
        seirs::StateVec nudged = settled;
        nudged.S += 1e-3;
        benchmark::DoNotOptimize(seirs::find_periodic_orbit(params, inc, nudged));
    }
}
BENCHMARK(BM_OrbitShooting);

} // namespace

BENCHMARK_MAIN();
