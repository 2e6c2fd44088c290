#include "ionwire/electrostatics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "ionwire/constants.hpp"
#include "ionwire/errors.hpp"

namespace ionwire {

namespace {

// ln((H+h)/(H-h)): the image-charge potential profile along the vertical.
double height_log(double H, double h) { return std::log((H + h) / (H - h)); }

void require(bool cond, const char* what) {
    if (!cond) throw DomainError(what);
}

void require_two_ions(const TrapGeometry& g, const char* op) {
    if (g.ion_count() != 2) {
        std::ostringstream msg;
        msg << op << ": exactly two ions required, got " << g.ion_count();
        throw DomainError(msg.str());
    }
}

}  // namespace

double geometry_alpha(double wire_height, double wire_radius) {
    require(wire_radius > 0.0, "geometry_alpha: wire radius must be positive");
    require(wire_radius < 2.0 * wire_height,
            "geometry_alpha: wire radius must be below the wire diameter-height bound 2H");
    return std::log((2.0 * wire_height - wire_radius) / wire_radius);
}

double geometry_beta(double wire_height, double ion_height, double alpha) {
    require(wire_height > 0.0, "geometry_beta: wire height must be positive");
    require(ion_height >= 0.0, "geometry_beta: ion height must be nonnegative");
    require(ion_height < wire_height,
            "geometry_beta: ion height must lie below the wire height");
    require(alpha > 0.0, "geometry_beta: alpha must be positive");
    const double H2 = wire_height * wire_height;
    return 2.0 * H2 / (alpha * (H2 - ion_height * ion_height));
}

SitePotentials wire_and_site_potentials(double lambda, const TrapGeometry& geometry) {
    const double H = geometry.wire_height;
    const double prefactor = lambda / (2.0 * constants::pi * constants::vacuum_permittivity);

    SitePotentials result;
    result.wire_potential = prefactor * geometry_alpha(H, geometry.wire_radius);
    result.site_potentials.reserve(geometry.ion_count());
    for (double h : geometry.ion_heights) {
        require(h >= 0.0 && h < H,
                "wire_and_site_potentials: ion heights must satisfy 0 <= h < H");
        result.site_potentials.push_back(prefactor * height_log(H, h));
    }
    return result;
}

double induced_wire_potential(const IonSpecies& species, const TrapGeometry& geometry) {
    require_two_ions(geometry, "induced_wire_potential");
    const double H = geometry.wire_height;
    const double L = geometry.wire_length;
    require(L > 0.0, "induced_wire_potential: wire length must be positive");

    double log_sum = 0.0;
    for (double h : geometry.ion_heights) {
        require(h >= 0.0 && h < H,
                "induced_wire_potential: ion heights must satisfy 0 <= h < H");
        log_sum += height_log(H, h);
    }
    return species.charge / (2.0 * constants::pi * constants::vacuum_permittivity * L) *
           log_sum;
}

double interaction_energy(double wire_potential, const IonSpecies& species,
                          const TrapGeometry& geometry, std::size_t ion_index) {
    require(ion_index < geometry.ion_count(),
            "interaction_energy: ion index out of range");
    const double H = geometry.wire_height;
    const double h = geometry.ion_heights[ion_index];
    require(h >= 0.0 && h < H, "interaction_energy: ion height must satisfy 0 <= h < H");
    const double alpha = geometry_alpha(H, geometry.wire_radius);
    return species.charge * wire_potential / alpha * height_log(H, h);
}

double induced_charge(const IonSpecies& species, const TrapGeometry& geometry,
                      double ion_height) {
    const double H = geometry.wire_height;
    require(ion_height >= 0.0 && ion_height < H,
            "induced_charge: ion height must satisfy 0 <= h < H");
    const double alpha = geometry_alpha(H, geometry.wire_radius);
    return -species.charge / alpha * height_log(H, ion_height);
}

double field_at_ion(double wire_potential, double wire_height, double ion_height,
                    double alpha) {
    const double beta = geometry_beta(wire_height, ion_height, alpha);
    return -beta / wire_height * wire_potential;
}

CouplingResult coupling_constant(const SystemConfig& cfg) {
    require_two_ions(cfg.geometry, "coupling_constant");

    ValidationReport report = validate_config(cfg);
    if (!report.ok()) {
        std::ostringstream msg;
        msg << "coupling_constant: invalid config:";
        for (const auto& e : report.errors) msg << "\n  " << e;
        throw DomainError(msg.str());
    }

    const double H = cfg.geometry.wire_height;
    const double L = cfg.geometry.wire_length;
    const double q = cfg.species.charge;
    const double h1 = cfg.geometry.ion_heights[0];
    const double h2 = cfg.geometry.ion_heights[1];
    const double H2 = H * H;

    CouplingResult result;
    result.alpha = geometry_alpha(H, cfg.geometry.wire_radius);
    result.beta = {geometry_beta(H, h1, result.alpha),
                   geometry_beta(H, h2, result.alpha)};
    result.gamma = 2.0 * q * q * H2 /
                   (constants::pi * constants::vacuum_permittivity * result.alpha * L *
                    (H2 - h1 * h1) * (H2 - h2 * h2));
    result.validity.warnings = std::move(report.warnings);
    return result;
}

double coupling_constant_oracle(const SystemConfig& cfg, double step) {
    require_two_ions(cfg.geometry, "coupling_constant_oracle");

    const double H = cfg.geometry.wire_height;
    const double h1 = cfg.geometry.ion_heights[0];
    const double h2 = cfg.geometry.ion_heights[1];
    const double clearance = std::min(H - h1, H - h2);
    require(clearance > 0.0, "coupling_constant_oracle: ions must sit below the wire");

    if (step == 0.0) step = clearance / 1e3;
    require(step > 0.0, "coupling_constant_oracle: step must be positive");
    if (step >= clearance / 2.0)
        throw DomainError(
            "coupling_constant_oracle: step too large for the wire clearance; the "
            "difference stencil would cross the wire and the estimate would be invalid");

    // Total interaction energy of both ions with the wire potential their
    // own images induce, as a function of the two vertical displacements.
    // This walks the potential/energy chain and never touches the closed
    // form, so it is an independent measurement of the coupling.
    auto pair_energy = [&cfg](double y1, double y2) {
        TrapGeometry displaced = cfg.geometry;
        displaced.ion_heights[0] += y1;
        displaced.ion_heights[1] += y2;
        const double v = induced_wire_potential(cfg.species, displaced);
        return interaction_energy(v, cfg.species, displaced, 0) +
               interaction_energy(v, cfg.species, displaced, 1);
    };

    // Fourth-order five-point central first-derivative stencil (center
    // weight zero), applied along each displacement axis in turn.
    constexpr std::array<std::pair<int, double>, 4> stencil{{
        {-2, 1.0 / 12.0},
        {-1, -8.0 / 12.0},
        {1, 8.0 / 12.0},
        {2, -1.0 / 12.0},
    }};

    double acc = 0.0;
    for (const auto& [o1, c1] : stencil)
        for (const auto& [o2, c2] : stencil)
            acc += c1 * c2 * pair_energy(o1 * step, o2 * step);

    return 0.5 * acc / (step * step);
}

}  // namespace ionwire
