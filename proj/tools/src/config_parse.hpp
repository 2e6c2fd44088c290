#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ionwire/config.hpp"

namespace ionwire::cli {

/// Result of reading a config file. On failure `errors` explains every
/// problem found (with line numbers); `config` is meaningful only when
/// ok() holds — no partially filled configs escape.
struct ParseResult {
    SystemConfig config;
    std::vector<std::string> errors;
    std::vector<std::string> warnings;

    bool ok() const { return errors.empty(); }
};

/// Parses the line-oriented config format:
///
///   [geometry]
///   H  = 200 um        # wire height over the ground plane
///   a  = 12.5 um       # wire radius
///   L  = 10 mm         # wire length
///   h0 = 150 um, 150 um
///   d  = 2 mm          # optional pairwise ion separations
///   [species]
///   name = Ca40+
///   [modes]
///   omega = 1 MHz, 1 MHz   # secular frequencies; a single value is shared
///   [environment]
///   T = 300 K          # defaults: T=300 K, R=0.6 Ohm, Rg=1e13 Ohm,
///   R = 0.6 Ohm        # resistivity_ratio=50, species Ca40+
///   Rg = 1e13 Ohm
///   resistivity_ratio = 50
///   anomalous_heating = 0.5 /s   # optional measured rate
///
/// Dimensioned values require a unit. Frequencies given in Hz/kHz/MHz/GHz
/// are ordinary frequencies (stored as omega = 2 pi nu); rad/s is accepted
/// for angular frequency directly.
ParseResult parse_config(std::string_view text);

/// Reads and parses a config file; missing/unreadable files become errors.
ParseResult parse_config_file(const std::string& path);

/// Canonical echo of a config in base SI units, with enough digits that
/// reparsing reproduces the exact same SystemConfig.
std::string dump_config(const SystemConfig& cfg);

}  // namespace ionwire::cli
