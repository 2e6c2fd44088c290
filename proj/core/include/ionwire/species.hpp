#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ionwire {

/// A trapped-ion species: everything the coupling formulas need to know
/// about the particle itself.
struct IonSpecies {
    std::string name;  ///< registry key, e.g. "Ca40+"
    double mass;       ///< [kg], strictly positive
    double charge;     ///< [C], nonzero; singly charged ions carry +e
};

/// Looks up a species by name in the built-in registry.
///
/// Throws std::invalid_argument for unknown names; the message lists the
/// known species so config errors are self-explanatory.
IonSpecies species_constants(std::string_view name);

/// Names of all registry entries, in registry order.
std::vector<std::string> known_species();

}  // namespace ionwire
