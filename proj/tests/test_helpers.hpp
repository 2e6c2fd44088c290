#pragma once

#include <cstdint>
#include <random>

#include "ionwire/ionwire.hpp"

namespace ionwire::testing {

/// Reference design point used across the suite: a calcium pair 150 um
/// under a 200 um-high, 10 mm-long wire, both modes at 1 MHz, room
/// temperature, 0.6 Ohm wire. Exchange time ~0.19 s.
inline SystemConfig baseline_config() {
    SystemConfig cfg;
    cfg.species = species_constants("Ca40+");
    cfg.geometry.wire_height = 200e-6;
    cfg.geometry.wire_radius = 12.5e-6;
    cfg.geometry.wire_length = 10e-3;
    cfg.geometry.ion_heights = {150e-6, 150e-6};
    cfg.modes = ModeSpec::from_frequencies({1e6, 1e6});
    return cfg;  // environment keeps its defaults (300 K, 0.6 Ohm, 1e13 Ohm)
}

/// Uniform double in [lo, hi) built from raw engine words, so sequences do
/// not depend on the standard library's distribution implementation.
inline double uniform(std::mt19937& rng, double lo, double hi) {
    const std::uint64_t bits = (std::uint64_t(rng()) << 32) | std::uint64_t(rng());
    return lo + (hi - lo) * (double(bits >> 11) * 0x1.0p-53);
}

/// Random geometry satisfying every validity requirement with margin:
/// thin wire, long wire, ions 20-90% of the way up.
inline TrapGeometry random_geometry(std::mt19937& rng) {
    TrapGeometry g;
    g.wire_height = uniform(rng, 50e-6, 1e-3);
    g.wire_radius = g.wire_height * uniform(rng, 0.01, 0.15);
    g.wire_length = g.wire_height * uniform(rng, 12.0, 100.0);
    g.ion_heights = {g.wire_height * uniform(rng, 0.2, 0.9),
                     g.wire_height * uniform(rng, 0.2, 0.9)};
    return g;
}

/// Random valid config with equal mode frequencies (a resonant pair).
inline SystemConfig random_resonant_config(std::mt19937& rng) {
    const auto names = known_species();
    SystemConfig cfg;
    cfg.species = species_constants(names[rng() % names.size()]);
    cfg.geometry = random_geometry(rng);
    const double nu = uniform(rng, 2e5, 8e6);
    cfg.modes = ModeSpec::from_frequencies({nu, nu});
    cfg.environment.wire_resistance = uniform(rng, 0.05, 5.0);
    return cfg;
}

/// Desk-scaled resonant pair in natural units: unit mass and frequency,
/// dimensionless coupling strength x = gamma/(m omega^2).
inline TwoModeHamiltonian desk_pair(double x) {
    return TwoModeHamiltonian{1.0, 1.0, 1.0, x};
}

}  // namespace ionwire::testing
