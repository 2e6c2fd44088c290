#pragma once

#include <numbers>

namespace ionwire {

/// Fundamental constants used by every formula in the library, in SI units.
///
/// Values are the 2018 CODATA recommendations (the charge, Planck and
/// Boltzmann constants are exact in the revised SI). They are hard-coded
/// rather than configurable: all downstream numbers are anchored to them.
struct PhysicalConstants {
    double elementary_charge;    ///< e   [C]
    double vacuum_permittivity;  ///< ε0  [F/m]
    double planck_h;             ///< h   [J s]
    double planck_hbar;          ///< ħ = h / 2π  [J s]
    double boltzmann_k;          ///< kB  [J/K]
    double atomic_mass_unit;     ///< u   [kg]
};

namespace constants {

inline constexpr double pi = std::numbers::pi;

inline constexpr double elementary_charge = 1.602'176'634e-19;     // exact
inline constexpr double vacuum_permittivity = 8.854'187'8128e-12;  // +/- 1.3e-21
inline constexpr double planck_h = 6.626'070'15e-34;               // exact
inline constexpr double planck_hbar = planck_h / (2.0 * pi);
inline constexpr double boltzmann_k = 1.380'649e-23;               // exact
inline constexpr double atomic_mass_unit = 1.660'539'066'60e-27;   // +/- 5e-37

}  // namespace constants

/// The CODATA set as a value, for callers that pass constants around.
constexpr PhysicalConstants si_constants() {
    return PhysicalConstants{
        constants::elementary_charge, constants::vacuum_permittivity,
        constants::planck_h,          constants::planck_hbar,
        constants::boltzmann_k,       constants::atomic_mass_unit,
    };
}

}  // namespace ionwire
