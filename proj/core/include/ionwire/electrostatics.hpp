#pragma once

#include <cstddef>
#include <vector>

#include "ionwire/config.hpp"

namespace ionwire {

// Wire-over-ground-plane electrostatics in the long-wire limit (L >> H).
// The wire is floating: ions talk to each other only through the charge
// they induce on it.

/// Logarithmic geometry factor of the wire over the ground plane,
/// ln((2H - a)/a). Dimensionless; requires 0 < a < 2H.
double geometry_alpha(double wire_height, double wire_radius);

/// Per-ion coupling geometry factor 2H^2 / (α (H^2 - h^2)).
/// Dimensionless; requires 0 <= h < H.
double geometry_beta(double wire_height, double ion_height, double alpha);

/// Wire surface potential and the potential it sources at each ion site,
/// for a given line charge density on the wire.
struct SitePotentials {
    double wire_potential;               ///< V at the wire surface [V]
    std::vector<double> site_potentials; ///< Φ_i at each ion height [V]
};

/// Potentials produced by line charge density `lambda` [C/m] on the wire:
/// V = (λ/2πε0) ln((2H-a)/a) at the surface, Φ_i = (λ/2πε0) ln((H+h_i)/(H-h_i))
/// at each ion site.
SitePotentials wire_and_site_potentials(double lambda, const TrapGeometry& geometry);

/// Potential induced on the floating wire by two unit charges at the ion
/// sites (reciprocity route):
/// V' = (q/2πε0 L) Σ_i ln((H+h_i)/(H-h_i)). Requires exactly two ions.
double induced_wire_potential(const IonSpecies& species, const TrapGeometry& geometry);

/// Interaction energy of ion `i` with the wire held at `wire_potential`:
/// U_i = (q V'/α) ln((H+h_i)/(H-h_i)).
double interaction_energy(double wire_potential, const IonSpecies& species,
                          const TrapGeometry& geometry, std::size_t ion_index);

/// Charge induced on the wire by one ion at height h:
/// q_ind = -(q/α) ln((H+h)/(H-h)). Opposite sign to the ion's own charge,
/// growing with h and reaching -q when the ion touches the wire surface
/// (h = H - a).
double induced_charge(const IonSpecies& species, const TrapGeometry& geometry,
                      double ion_height);

/// Electric field at an ion site produced by wire potential V, along the
/// vertical axis pointing away from the ground plane: E = -(β/H) V.
double field_at_ion(double wire_potential, double wire_height, double ion_height,
                    double alpha);

/// Closed-form wire-mediated spring coupling between two ions and its
/// supporting geometry factors. `validity` carries regime warnings from
/// validate_config; it never holds errors (those throw instead).
struct CouplingResult {
    double alpha;              ///< wire geometry factor
    std::vector<double> beta;  ///< per-ion factors β_i
    double gamma;              ///< coupling constant [N/m]
    ValidationReport validity;
};

/// Coupling constant between the two ions of `cfg`:
/// γ = 2 q^2 H^2 / (π ε0 α L (H^2 - h1^2)(H^2 - h2^2)).
/// Throws DomainError when the geometry is invalid.
CouplingResult coupling_constant(const SystemConfig& cfg);

/// Independent numerical route to γ: half the mixed second derivative of
/// the total wire-mediated interaction energy with respect to the two ion
/// displacements, evaluated with fourth-order central differences on the
/// potential/energy chain (never the closed form above).
///
/// `step` is the displacement step [m]; 0 selects min_i(H - h0_i)/1e3.
/// Steps at or beyond half the smallest wire clearance are rejected: the
/// stencil would leave the model's domain and the estimate would be
/// meaningless.
double coupling_constant_oracle(const SystemConfig& cfg, double step = 0.0);

}  // namespace ionwire
