#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ionwire/config.hpp"

namespace ionwire {

// Noise and loss estimates for the wire link, each expressed as a
// timescale to compare against the exchange time.

/// Current a single ion's zero-point-scale motion induces in the wire:
/// I = q sqrt(ħω/m) β/H  [A].
double induced_current_amplitude(const SystemConfig& cfg, std::size_t ion_index = 0);

/// Time to dissipate one motional quantum in the wire resistance,
/// τ = ħω / (I²R/2), with I²R/2 the time-averaged dissipated power [s].
/// +inf when R = 0.
double dissipation_time(const SystemConfig& cfg, std::size_t ion_index = 0);

/// Johnson-noise heating time per quantum at temperature T: τ = hQ/(kB T) [s].
/// +inf when T = 0 or R = 0.
double johnson_heating_time(const SystemConfig& cfg, double temperature,
                            std::size_t ion_index = 0);

/// Johnson heating time in the cryogenic scenario: the wire resistance
/// drops by the configured resistivity ratio (Q grows by it) and the bath
/// sits at `cryo_temperature`. τ(T_cryo)/τ(T_room) = ratio·T_room/T_cryo.
double cryo_heating_time(const SystemConfig& cfg, double cryo_temperature = 4.0,
                         std::size_t ion_index = 0);

enum class Verdict { ok, marginal, blocking };

/// Verdict thresholds as margin ratios timescale/t_ex. A mechanism is ok
/// above `ok_above`, blocking below `blocking_below`, marginal between —
/// "comparable to the exchange time" spans a symmetric decade by default.
struct BudgetPolicy {
    double ok_above = 10.0;
    double blocking_below = 0.1;
};

/// One decoherence mechanism in the budget.
struct BudgetEntry {
    std::string mechanism;
    double timescale;  ///< [s]; +inf means the mechanism is absent
    double margin;     ///< timescale / t_ex
    Verdict verdict;
};

/// The full design budget: every noise timescale against the exchange time.
struct NoiseBudget {
    double t_ex;                 ///< exchange time [s]
    double induced_current;      ///< [A]
    double dissipation_time;     ///< [s]
    double johnson_time;         ///< at the configured temperature [s]
    double johnson_time_room;    ///< at 300 K [s]
    double johnson_time_cryo;    ///< at 4 K with the resistivity ratio [s]
    double leakage_decay;        ///< 4 R_g C [s]
    std::vector<BudgetEntry> entries;
    Verdict overall;             ///< worst verdict across entries

    const BudgetEntry* find(const std::string& mechanism) const;
};

const char* to_string(Verdict v);

/// Assembles the noise budget for a resonant two-ion config. Verdict per
/// mechanism (dissipation, Johnson at the configured T, wire leakage, and
/// anomalous heating when a rate is supplied), worst-case overall.
NoiseBudget noise_budget(const SystemConfig& cfg, const BudgetPolicy& policy = {});

}  // namespace ionwire
