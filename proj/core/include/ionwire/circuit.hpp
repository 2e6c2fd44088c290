#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ionwire/config.hpp"

namespace ionwire {

// Lumped-element picture of the coupled system: each ion maps to a series
// LC branch, the wire to a capacitance to ground with a series resistance
// and a parallel leakage path. Both LC branches join at one node.

/// Component values of the equivalent network.
///
/// `ion_inductance`/`ion_capacitance` are the textbook per-ion values
/// L_i = m H²/(β_i² q²), C_i = 1/(ω_i² L_i); these feed the quality factor,
/// heating times and the capacitance-ratio exchange rate. For *simulation*
/// the branch capacitance is detuned (see coupling_network) so that the
/// branch resonance loaded by the wire capacitance sits at ω_i.
struct CircuitEquivalent {
    std::vector<double> ion_inductance;        ///< L_i [H]
    std::vector<double> ion_capacitance;       ///< C_i [F]
    std::vector<double> branch_capacitance;    ///< simulated branch C_i^br [F]
    double wire_capacitance = 0.0;             ///< C [F]
    double wire_resistance = 0.0;              ///< R [Ω]
    double leakage_resistance = 0.0;           ///< R_g [Ω], +inf allowed

    std::size_t branch_count() const { return ion_inductance.size(); }
};

/// Equivalent LC values for ion `i` of the config: (L_i, C_i).
struct IonLC {
    double inductance;
    double capacitance;
};
IonLC ion_equivalent_lc(const SystemConfig& cfg, std::size_t ion_index);

/// Wire capacitance to ground, C = 2πε0 L / α.
double wire_capacitance(const TrapGeometry& geometry);

/// Q = (1/R)·sqrt(L_i/C_i) for ion `i`. R = 0 is rejected with DomainError:
/// the factor is infinite and downstream numbers built from it would be
/// silently meaningless.
double quality_factor(const SystemConfig& cfg, std::size_t ion_index = 0);

/// Exchange rate through the capacitance-ratio route:
/// 1/t_ex = 2 ν sqrt(C_1 C_2) / C. Requires a resonant pair; agrees with the
/// mechanical route γ/(πωm) identically.
double exchange_rate_circuit(const SystemConfig& cfg);

/// Full network (branch values detuned for wire-capacitance pulling) for a
/// two-ion config. Pass overrides for lossless runs.
CircuitEquivalent coupling_network(const SystemConfig& cfg);

/// Network state: per-branch currents and charges plus the junction-node
/// voltage. The wire-capacitor charge is recovered internally from the node
/// voltage and the branch currents.
struct CircuitState {
    std::vector<double> branch_currents;  ///< I_i [A]
    std::vector<double> branch_charges;   ///< q_i [C]
    double node_voltage = 0.0;            ///< V at the branch junction [V]
};

/// Time-sampled network trajectory.
struct CircuitTrace {
    std::vector<double> times;
    std::vector<CircuitState> states;
};

/// Propagates the network from `initial` and samples it at `times`
/// (nonnegative, nondecreasing). The network is linear and time-invariant,
/// so every sample is evaluated spectrally straight from the initial state:
/// no step-size control and no accumulation of error between samples, even
/// across millions of oscillation periods. Near-defective networks (e.g. a
/// critically damped branch) fall back to stepped matrix exponentials.
CircuitTrace simulate_circuit(const CircuitEquivalent& circ, const CircuitState& initial,
                              std::span<const double> times);

/// Map a two-ion classical mechanical state onto the network:
/// I_i = (qβ_i/H)·v_i, q_i = (qβ_i/H)·y_i, with the wire capacitor holding
/// the ions' image charge so the floating wire stays neutral.
CircuitState circuit_state_from_mechanical(const SystemConfig& cfg,
                                           const CircuitEquivalent& circ,
                                           const std::vector<double>& positions,
                                           const std::vector<double>& velocities);

/// Total electromagnetic energy stored in the network [J].
double circuit_energy(const CircuitEquivalent& circ, const CircuitState& state);

/// Charge-relaxation decay constant 4 R_g C of the wire through its leakage
/// path [s]; +inf when the leakage resistance is infinite.
double leakage_decay_constant(const CircuitEquivalent& circ);

}  // namespace ionwire
