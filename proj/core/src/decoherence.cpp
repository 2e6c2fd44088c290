#include "ionwire/decoherence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "ionwire/circuit.hpp"
#include "ionwire/constants.hpp"
#include "ionwire/dynamics.hpp"
#include "ionwire/electrostatics.hpp"
#include "ionwire/errors.hpp"

namespace ionwire {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

double beta_for_ion(const SystemConfig& cfg, std::size_t i) {
    const double alpha = geometry_alpha(cfg.geometry.wire_height, cfg.geometry.wire_radius);
    return geometry_beta(cfg.geometry.wire_height, cfg.geometry.ion_heights[i], alpha);
}

Verdict classify(double margin, const BudgetPolicy& policy) {
    if (margin > policy.ok_above) return Verdict::ok;
    if (margin < policy.blocking_below) return Verdict::blocking;
    return Verdict::marginal;
}

}  // namespace

double induced_current_amplitude(const SystemConfig& cfg, std::size_t ion_index) {
    if (ion_index >= cfg.ion_count())
        throw DomainError("induced_current_amplitude: ion index out of range");
    const double omega = cfg.modes.angular_frequencies.at(ion_index);
    if (!(omega > 0.0))
        throw DomainError("induced_current_amplitude: secular frequency must be positive");
    const double velocity_scale =
        std::sqrt(constants::planck_hbar * omega / cfg.species.mass);
    return cfg.species.charge * velocity_scale * beta_for_ion(cfg, ion_index) /
           cfg.geometry.wire_height;
}

double dissipation_time(const SystemConfig& cfg, std::size_t ion_index) {
    const double R = cfg.environment.wire_resistance;
    if (R < 0.0) throw DomainError("dissipation_time: wire resistance must be nonnegative");
    if (R == 0.0) return inf;
    const double omega = cfg.modes.angular_frequencies.at(ion_index);
    const double current = induced_current_amplitude(cfg, ion_index);
    const double mean_power = current * current * R / 2.0;
    return constants::planck_hbar * omega / mean_power;
}

double johnson_heating_time(const SystemConfig& cfg, double temperature,
                            std::size_t ion_index) {
    if (temperature < 0.0)
        throw DomainError("johnson_heating_time: temperature must be nonnegative");
    if (temperature == 0.0 || cfg.environment.wire_resistance == 0.0) return inf;
    const double q_factor = quality_factor(cfg, ion_index);
    return constants::planck_h * q_factor / (constants::boltzmann_k * temperature);
}

double cryo_heating_time(const SystemConfig& cfg, double cryo_temperature,
                         std::size_t ion_index) {
    if (cryo_temperature < 0.0)
        throw DomainError("cryo_heating_time: temperature must be nonnegative");
    // Cooling drops the wire resistivity by the configured ratio, so Q rises
    // by it: tau scales as ratio / T relative to the room-temperature value.
    return johnson_heating_time(cfg, cryo_temperature, ion_index) *
           cfg.environment.resistivity_ratio;
}

const BudgetEntry* NoiseBudget::find(const std::string& mechanism) const {
    const auto it = std::find_if(entries.begin(), entries.end(),
                                 [&](const BudgetEntry& e) { return e.mechanism == mechanism; });
    return it == entries.end() ? nullptr : &*it;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::ok: return "ok";
        case Verdict::marginal: return "marginal";
        case Verdict::blocking: return "blocking";
    }
    return "?";
}

NoiseBudget noise_budget(const SystemConfig& cfg, const BudgetPolicy& policy) {
    if (cfg.ion_count() != 2)
        throw DomainError("noise_budget: exactly two ions required");

    NoiseBudget budget;
    budget.t_ex = exchange_time(cfg).t_ex;

    // Worst ion per mechanism: the larger induced current dissipates faster
    // and the smaller Q heats faster, so take the minimum timescale.
    budget.induced_current = std::max(induced_current_amplitude(cfg, 0),
                                      induced_current_amplitude(cfg, 1));
    budget.dissipation_time = std::min(dissipation_time(cfg, 0), dissipation_time(cfg, 1));
    const double temperature = cfg.environment.temperature;
    budget.johnson_time = std::min(johnson_heating_time(cfg, temperature, 0),
                                   johnson_heating_time(cfg, temperature, 1));
    budget.johnson_time_room = std::min(johnson_heating_time(cfg, 300.0, 0),
                                        johnson_heating_time(cfg, 300.0, 1));
    budget.johnson_time_cryo =
        std::min(cryo_heating_time(cfg, 4.0, 0), cryo_heating_time(cfg, 4.0, 1));

    CircuitEquivalent circ;
    circ.wire_capacitance = wire_capacitance(cfg.geometry);
    circ.leakage_resistance = cfg.environment.leakage_resistance;
    budget.leakage_decay = leakage_decay_constant(circ);

    auto add = [&](const std::string& name, double timescale) {
        BudgetEntry entry;
        entry.mechanism = name;
        entry.timescale = timescale;
        entry.margin = timescale / budget.t_ex;
        entry.verdict = classify(entry.margin, policy);
        budget.entries.push_back(std::move(entry));
    };

    add("dissipation", budget.dissipation_time);
    add("johnson", budget.johnson_time);
    add("leakage", budget.leakage_decay);
    if (cfg.environment.anomalous_heating_rate) {
        const double rate = *cfg.environment.anomalous_heating_rate;
        add("anomalous", rate > 0.0 ? 1.0 / rate : inf);
    }

    budget.overall = Verdict::ok;
    for (const auto& entry : budget.entries) {
        if (static_cast<int>(entry.verdict) > static_cast<int>(budget.overall))
            budget.overall = entry.verdict;
    }
    return budget;
}

}  // namespace ionwire
