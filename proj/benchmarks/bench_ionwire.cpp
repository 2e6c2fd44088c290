#include <benchmark/benchmark.h>

#include <vector>

#include "ionwire/ionwire.hpp"

namespace {

using namespace ionwire;

SystemConfig design_point() {
    SystemConfig cfg;
    cfg.species = species_constants("Ca40+");
    cfg.geometry.wire_height = 200e-6;
    cfg.geometry.wire_radius = 12.5e-6;
    cfg.geometry.wire_length = 10e-3;
    cfg.geometry.ion_heights = {150e-6, 150e-6};
    cfg.modes = ModeSpec::from_frequencies({1e6, 1e6});
    return cfg;
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        out[std::size_t(k)] = lo + (hi - lo) * k / (n - 1);
    return out;
}

void bm_coupling_constant(benchmark::State& state) {
    const SystemConfig cfg = design_point();
    for (auto _ : state) benchmark::DoNotOptimize(coupling_constant(cfg).gamma);
}
BENCHMARK(bm_coupling_constant);

void bm_coupling_oracle(benchmark::State& state) {
    const SystemConfig cfg = design_point();
    for (auto _ : state) benchmark::DoNotOptimize(coupling_constant_oracle(cfg));
}
BENCHMARK(bm_coupling_oracle);

void bm_exchange_time(benchmark::State& state) {
    const SystemConfig cfg = design_point();
    for (auto _ : state) benchmark::DoNotOptimize(exchange_time(cfg).t_ex);
}
BENCHMARK(bm_exchange_time);

void bm_noise_budget(benchmark::State& state) {
    const SystemConfig cfg = design_point();
    for (auto _ : state) benchmark::DoNotOptimize(noise_budget(cfg).overall);
}
BENCHMARK(bm_noise_budget);

void bm_classical_trace(benchmark::State& state) {
    const SystemConfig cfg = design_point();
    const TwoModeHamiltonian sys = TwoModeHamiltonian::from_config(cfg);
    const double t_ex = exchange_time(sys).t_ex;
    const ClassicalState start{{1e-9, 0.0}, {0.0, 0.0}};
    const std::vector<double> grid = linspace(0.0, 2.0 * t_ex, 256);
    for (auto _ : state) {
        double acc = 0.0;
        for (double t : grid) acc += evolve_classical(sys, start, t).positions[1];
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(state.iterations() * int64_t(grid.size()));
}
BENCHMARK(bm_classical_trace);

// Propagator construction cost scales with the truncation as ((n+1)^2)^3.
void bm_propagator_build(benchmark::State& state) {
    const TwoModeHamiltonian sys{1.0, 1.0, 1.0, 1e-3};
    const int n_max = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const TwoModePropagator prop(sys, n_max);
        benchmark::DoNotOptimize(prop.n_max());
    }
}
BENCHMARK(bm_propagator_build)->Arg(8)->Arg(12)->Arg(16)->Arg(20);

void bm_propagator_evolve(benchmark::State& state) {
    const TwoModeHamiltonian sys{1.0, 1.0, 1.0, 1e-3};
    const int n_max = static_cast<int>(state.range(0));
    const TwoModePropagator prop(sys, n_max);
    const QuantumState start = QuantumState::fock(n_max, 1, 0);
    const double t_ex = exchange_time(sys).t_ex;
    for (auto _ : state)
        benchmark::DoNotOptimize(prop.evolve(start, t_ex).squared_norm());
}
BENCHMARK(bm_propagator_evolve)->Arg(8)->Arg(12)->Arg(16)->Arg(20);

void bm_circuit_trace(benchmark::State& state) {
    const SystemConfig cfg = design_point();
    const CircuitEquivalent circ = coupling_network(cfg);
    const CircuitState start =
        circuit_state_from_mechanical(cfg, circ, {1e-9, 0.0}, {0.0, 0.0});
    const std::vector<double> grid =
        linspace(0.0, 2.0 * exchange_time(cfg).t_ex, 256);
    for (auto _ : state) {
        const CircuitTrace trace = simulate_circuit(circ, start, grid);
        benchmark::DoNotOptimize(trace.states.back().node_voltage);
    }
    state.SetItemsProcessed(state.iterations() * int64_t(grid.size()));
}
BENCHMARK(bm_circuit_trace);

}  // namespace

BENCHMARK_MAIN();
