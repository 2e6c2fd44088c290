#include "ionwire/config.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ionwire/constants.hpp"

namespace ionwire {

ModeSpec ModeSpec::from_frequencies(const std::vector<double>& hz) {
    ModeSpec spec;
    spec.angular_frequencies.reserve(hz.size());
    for (double nu : hz) spec.angular_frequencies.push_back(2.0 * constants::pi * nu);
    return spec;
}

double ModeSpec::frequency(std::size_t i) const {
    if (i >= angular_frequencies.size())
        throw std::out_of_range("ModeSpec::frequency: mode index out of range");
    return angular_frequencies[i] / (2.0 * constants::pi);
}

namespace {

void fmt_push(std::vector<std::string>& out, const std::ostringstream& msg) {
    out.push_back(msg.str());
}

}  // namespace

ValidationReport validate_config(const SystemConfig& cfg) {
    ValidationReport report;
    auto error = [&report](const auto&... parts) {
        std::ostringstream msg;
        (msg << ... << parts);
        fmt_push(report.errors, msg);
    };
    auto warn = [&report](const auto&... parts) {
        std::ostringstream msg;
        (msg << ... << parts);
        fmt_push(report.warnings, msg);
    };

    const TrapGeometry& g = cfg.geometry;
    const double H = g.wire_height;
    const double a = g.wire_radius;
    const double L = g.wire_length;

    if (!(H > 0.0)) error("wire height H must be positive (got ", H, " m)");
    if (!(a > 0.0)) error("wire radius a must be positive (got ", a, " m)");
    if (!(L > 0.0)) error("wire length L must be positive (got ", L, " m)");
    if (H > 0.0 && a > 0.0 && a >= H)
        error("wire radius a = ", a, " m must be below the wire height H = ", H, " m");

    if (g.ion_heights.size() < 2) error("at least two ion heights are required");
    for (std::size_t i = 0; i < g.ion_heights.size(); ++i) {
        const double h = g.ion_heights[i];
        if (h < 0.0) error("ion height h0[", i, "] must be nonnegative (got ", h, " m)");
        if (H > 0.0 && h >= H)
            error("ion height h0[", i, "] = ", h, " m must lie below the wire height H = ",
                  H, " m");
    }

    if (!g.ion_separations.empty()) {
        const std::size_t n = g.ion_heights.size();
        const std::size_t expected = n * (n - 1) / 2;
        if (g.ion_separations.size() != expected)
            error("expected ", expected, " pairwise ion separations for ", n,
                  " ions, got ", g.ion_separations.size());
        for (std::size_t k = 0; k < g.ion_separations.size(); ++k) {
            if (!(g.ion_separations[k] > 0.0))
                error("ion separation d[", k, "] must be positive (got ",
                      g.ion_separations[k], " m)");
        }
    }

    if (!(cfg.species.mass > 0.0))
        error("species mass must be positive (got ", cfg.species.mass, " kg)");
    if (cfg.species.charge == 0.0) error("species charge must be nonzero");

    if (cfg.modes.size() != g.ion_heights.size())
        error("mode count (", cfg.modes.size(), ") must match ion count (",
              g.ion_heights.size(), ")");
    for (std::size_t i = 0; i < cfg.modes.size(); ++i) {
        if (!(cfg.modes.angular_frequencies[i] > 0.0))
            error("secular frequency omega[", i, "] must be positive (got ",
                  cfg.modes.angular_frequencies[i], " rad/s)");
    }

    const Environment& env = cfg.environment;
    if (env.temperature < 0.0)
        error("temperature must be nonnegative (got ", env.temperature, " K)");
    if (env.wire_resistance < 0.0)
        error("wire resistance must be nonnegative (got ", env.wire_resistance, " Ohm)");
    if (!(env.leakage_resistance > 0.0))
        error("leakage resistance must be positive (got ", env.leakage_resistance,
              " Ohm)");
    if (env.resistivity_ratio < 1.0)
        error("resistivity ratio must be >= 1 (got ", env.resistivity_ratio, ")");
    if (env.anomalous_heating_rate && !(*env.anomalous_heating_rate >= 0.0))
        error("anomalous heating rate must be nonnegative (got ",
              *env.anomalous_heating_rate, " quanta/s)");

    // Regime warnings: the formulas assume a long thin wire with ions well
    // separated. Factor-10 margins stand in for the asymptotic "<<".
    if (report.errors.empty()) {
        if (L < 10.0 * H)
            warn("long-wire limit violated: L = ", L, " m is below 10 H = ", 10.0 * H,
                 " m; the logarithmic wire formulas assume L >> H");
        if (a > H / 5.0)
            warn("thick wire: a = ", a, " m exceeds H/5 = ", H / 5.0,
                 " m; the thin-wire potential is inaccurate");
        if (!g.ion_separations.empty()) {
            std::size_t k = 0;
            const std::size_t n = g.ion_heights.size();
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = i + 1; j < n && k < g.ion_separations.size();
                     ++j, ++k) {
                    if (g.ion_separations[k] < 10.0 * H)
                        warn("ions ", i, " and ", j, " are separated by ",
                             g.ion_separations[k], " m < 10 H; direct Coulomb coupling ",
                             "competes with the wire-mediated term");
                    if (g.ion_separations[k] > L)
                        warn("ions ", i, " and ", j, " are separated by ",
                             g.ion_separations[k], " m > L; both must sit under the wire");
                }
            }
        }
    }

    return report;
}

}  // namespace ionwire
