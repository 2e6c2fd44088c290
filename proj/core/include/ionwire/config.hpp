#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "ionwire/species.hpp"

namespace ionwire {

/// Trap/wire geometry. All lengths in meters.
///
/// The wire of radius `wire_radius` runs parallel to a ground plane at
/// height `wire_height` over a length `wire_length`; each ion sits below
/// it at its own height above the plane. Valid configurations satisfy
/// 0 < a < H and 0 <= h0_i < H.
struct TrapGeometry {
    double wire_height = 0.0;          ///< H  [m]
    double wire_radius = 0.0;          ///< a  [m]
    double wire_length = 0.0;          ///< L  [m]
    std::vector<double> ion_heights;   ///< h0_i [m], one per ion
    /// Optional pairwise ion separations along the wire [m], upper triangle
    /// in row-major order ((0,1), (0,2), ..., (1,2), ...). Used only for
    /// validity warnings; empty when unspecified.
    std::vector<double> ion_separations;

    std::size_t ion_count() const { return ion_heights.size(); }
};

/// Secular (trap) frequencies of the coupled motional modes, stored as
/// angular frequencies [rad/s].
struct ModeSpec {
    std::vector<double> angular_frequencies;  ///< ω_i [rad/s]

    /// Builds a ModeSpec from ordinary frequencies ν [Hz] via ω = 2πν.
    static ModeSpec from_frequencies(const std::vector<double>& hz);

    /// Ordinary frequency ν_i = ω_i / 2π [Hz].
    double frequency(std::size_t i) const;

    std::size_t size() const { return angular_frequencies.size(); }
};

/// Electrical/thermal environment of the wire.
struct Environment {
    double temperature = 300.0;         ///< T [K]
    double wire_resistance = 0.6;       ///< R [Ω], series resistance of the wire
    double leakage_resistance = 1e13;   ///< R_g [Ω], wire-to-ground leakage; +inf allowed
    double resistivity_ratio = 50.0;    ///< room/cryo resistivity ratio, >= 1
    /// Empirical anomalous (patch-potential) heating rate [quanta/s].
    /// No first-principles model exists; absent unless measured.
    std::optional<double> anomalous_heating_rate;
};

/// A complete description of one wire-coupling system: the single input
/// type consumed by every downstream operation.
struct SystemConfig {
    IonSpecies species;      ///< all ions share one species
    TrapGeometry geometry;
    ModeSpec modes;          ///< one frequency per ion, same order as heights
    Environment environment;

    std::size_t ion_count() const { return geometry.ion_count(); }
};

/// Outcome of config validation. Errors make the config unusable;
/// warnings flag leaving a formula's regime of validity (long-wire limit,
/// thick wire, close ions) without blocking computation.
struct ValidationReport {
    std::vector<std::string> errors;
    std::vector<std::string> warnings;

    bool ok() const { return errors.empty(); }
};

/// Checks a SystemConfig against the model's domain of validity.
///
/// Never throws and never aborts: every violation is collected into the
/// report. A config whose report has no errors is accepted by every
/// operation in the library.
ValidationReport validate_config(const SystemConfig& cfg);

}  // namespace ionwire
