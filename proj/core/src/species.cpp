#include "ionwire/species.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

#include "ionwire/constants.hpp"

namespace ionwire {

namespace {

struct RegistryEntry {
    const char* name;
    double mass_u;  // atomic mass units
};

// Singly charged ions in common trapped-ion service. Masses are the neutral
// standard atomic masses to the precision the coupling formulas can use.
constexpr std::array<RegistryEntry, 6> registry{{
    {"Be9+", 9.0121831},
    {"Mg24+", 23.985041697},
    {"Ca40+", 39.9626},
    {"Sr88+", 87.9056125},
    {"Ba138+", 137.905247},
    {"Yb171+", 170.9363302},
}};

}  // namespace

IonSpecies species_constants(std::string_view name) {
    for (const auto& entry : registry) {
        if (name == entry.name) {
            return IonSpecies{
                std::string(entry.name),
                entry.mass_u * constants::atomic_mass_unit,
                constants::elementary_charge,
            };
        }
    }
    std::ostringstream msg;
    msg << "unknown ion species '" << name << "'; known species:";
    for (const auto& entry : registry) msg << ' ' << entry.name;
    throw std::invalid_argument(msg.str());
}

std::vector<std::string> known_species() {
    std::vector<std::string> names;
    names.reserve(registry.size());
    for (const auto& entry : registry) names.emplace_back(entry.name);
    return names;
}

}  // namespace ionwire
