#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <iostream>
#include <optional>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "config_parse.hpp"
#include "ionwire/ionwire.hpp"
#include "output.hpp"

namespace ionwire::cli {

namespace {

nlohmann::json json_number(double v) {
    if (std::isfinite(v)) return v;
    if (std::isnan(v)) return "nan";
    return v > 0 ? "inf" : "-inf";
}

// Loads + validates the config; prints problems to stderr. Returns nullopt
// (and sets `exit_code`) when the run cannot proceed.
std::optional<SystemConfig> load_config(const RunManifest& manifest, int& exit_code) {
    ParseResult parsed = parse_config_file(manifest.config_path);
    if (!parsed.ok()) {
        for (const auto& e : parsed.errors)
            std::cerr << manifest.config_path << ": error: " << e << "\n";
        exit_code = exit_input_error;
        return std::nullopt;
    }
    const ValidationReport report = validate_config(parsed.config);
    for (const auto& w : report.warnings)
        std::cerr << manifest.config_path << ": warning: " << w << "\n";
    if (!report.ok()) {
        for (const auto& e : report.errors)
            std::cerr << manifest.config_path << ": error: " << e << "\n";
        exit_code = exit_input_error;
        return std::nullopt;
    }
    exit_code = exit_ok;
    return std::move(parsed.config);
}

std::string pick_format(const RunManifest& manifest, const char* fallback) {
    return manifest.format.empty() ? fallback : manifest.format;
}

struct InitialSpec {
    enum class Kind { displaced, fock, coherent } kind;
    double displacement = 0.0;        // [m]
    int occupation = 0;
    std::complex<double> amplitude;   // coherent
};

InitialSpec parse_initial(const std::string& text) {
    const auto colon = text.find(':');
    const std::string kind = text.substr(0, colon);
    std::vector<double> args;
    if (colon != std::string::npos) {
        std::string rest = text.substr(colon + 1);
        std::replace(rest.begin(), rest.end(), ':', ' ');
        std::istringstream in(rest);
        double v;
        while (in >> v) args.push_back(v);
    }

    InitialSpec spec{};
    if (kind == "displaced") {
        if (args.size() != 1)
            throw DomainError("--initial displaced:Y0 takes one displacement in meters");
        spec.kind = InitialSpec::Kind::displaced;
        spec.displacement = args[0];
    } else if (kind == "fock") {
        if (args.size() != 1 || args[0] < 0 || args[0] != std::floor(args[0]))
            throw DomainError("--initial fock:N takes one nonnegative integer");
        spec.kind = InitialSpec::Kind::fock;
        spec.occupation = static_cast<int>(args[0]);
    } else if (kind == "coherent") {
        if (args.empty() || args.size() > 2)
            throw DomainError("--initial coherent:RE[:IM] takes one or two numbers");
        spec.kind = InitialSpec::Kind::coherent;
        spec.amplitude = {args[0], args.size() > 1 ? args[1] : 0.0};
    } else {
        throw DomainError("unknown --initial kind '" + kind +
                          "' (expected displaced:Y0, fock:N, coherent:RE[:IM])");
    }
    return spec;
}

std::vector<double> time_grid(double tmax, int samples) {
    if (samples < 1) throw DomainError("--samples must be at least 1");
    if (samples == 1) return {0.0};  // single-row trace of the initial state
    if (!(tmax > 0.0)) throw DomainError("--tmax must be positive");
    std::vector<double> grid(static_cast<std::size_t>(samples));
    for (int k = 0; k < samples; ++k) grid[std::size_t(k)] = tmax * k / (samples - 1);
    return grid;
}

double default_tmax(const SystemConfig& cfg) {
    try {
        return 2.0 * exchange_time(cfg).t_ex;
    } catch (const NonResonantError&) {
        throw DomainError(
            "the default time span covers two exchange periods, which only "
            "exist for a resonant pair; pass --tmax explicitly");
    }
}

std::string render(const Table& table, const std::string& format) {
    if (format == "csv") return table.to_csv();
    if (format == "json") return table.to_json();
    if (format == "text") return table.to_text();
    throw DomainError("unknown --format '" + format + "' (expected csv, json, text)");
}

// ---------------------------------------------------------------- budget

std::string budget_text(const SystemConfig& cfg, const CouplingResult& coupling,
                        const ExchangeResult& exchange, const NoiseBudget& budget) {
    std::ostringstream out;
    out << "wire coupling design budget\n";
    out << "  species          " << cfg.species.name << " x" << cfg.ion_count() << "\n";
    out << "  coupling gamma   " << format_sci(coupling.gamma) << " N/m\n";
    out << "  exchange time    " << format_sci(exchange.t_ex) << " s\n";
    out << "  exchange phase   " << format_sci(exchange.theta_principal)
        << " rad (winding " << exchange.winding << ")\n";

    for (std::size_t i = 0; i < cfg.ion_count(); ++i) {
        const IonLC lc = ion_equivalent_lc(cfg, i);
        out << "  ion " << i << " equivalent L " << format_sci(lc.inductance)
            << " H, C " << format_sci(lc.capacitance) << " F";
        if (cfg.environment.wire_resistance > 0.0)
            out << ", Q " << format_sci(quality_factor(cfg, i));
        out << "\n";
    }
    out << "  wire capacitance " << format_sci(wire_capacitance(cfg.geometry)) << " F\n";
    out << "  induced current  " << format_sci(budget.induced_current) << " A\n";
    out << "  johnson @300K    " << format_sci(budget.johnson_time_room)
        << " s/quantum\n";
    out << "  johnson @4K cryo " << format_sci(budget.johnson_time_cryo)
        << " s/quantum\n";
    out << "\n  mechanism timescales vs t_ex:\n";
    for (const auto& entry : budget.entries) {
        out << "    " << entry.mechanism;
        out << std::string(entry.mechanism.size() < 12 ? 12 - entry.mechanism.size() : 1,
                           ' ');
        out << format_sci(entry.timescale) << " s  margin " << format_sci(entry.margin)
            << "  " << to_string(entry.verdict) << "\n";
    }
    out << "  overall: " << to_string(budget.overall) << "\n";
    if (!coupling.validity.warnings.empty()) {
        out << "\n  validity warnings:\n";
        for (const auto& w : coupling.validity.warnings) out << "    - " << w << "\n";
    }
    return out.str();
}

nlohmann::json budget_json(const SystemConfig& cfg, const CouplingResult& coupling,
                           const ExchangeResult& exchange, const NoiseBudget& budget) {
    nlohmann::json doc;
    doc["species"] = cfg.species.name;
    doc["gamma_N_per_m"] = json_number(coupling.gamma);
    doc["alpha"] = json_number(coupling.alpha);
    doc["beta"] = {json_number(coupling.beta[0]), json_number(coupling.beta[1])};
    doc["t_ex_s"] = json_number(exchange.t_ex);
    doc["theta_rad"] = json_number(exchange.theta_principal);
    doc["theta_winding"] = exchange.winding;
    for (std::size_t i = 0; i < cfg.ion_count(); ++i) {
        const IonLC lc = ion_equivalent_lc(cfg, i);
        nlohmann::json ion;
        ion["inductance_H"] = json_number(lc.inductance);
        ion["capacitance_F"] = json_number(lc.capacitance);
        if (cfg.environment.wire_resistance > 0.0)
            ion["quality_factor"] = json_number(quality_factor(cfg, i));
        doc["ions"].push_back(std::move(ion));
    }
    doc["wire_capacitance_F"] = json_number(wire_capacitance(cfg.geometry));
    doc["induced_current_A"] = json_number(budget.induced_current);
    doc["johnson_300K_s"] = json_number(budget.johnson_time_room);
    doc["johnson_cryo_4K_s"] = json_number(budget.johnson_time_cryo);
    for (const auto& entry : budget.entries) {
        nlohmann::json mech;
        mech["mechanism"] = entry.mechanism;
        mech["timescale_s"] = json_number(entry.timescale);
        mech["margin"] = json_number(entry.margin);
        mech["verdict"] = to_string(entry.verdict);
        doc["mechanisms"].push_back(std::move(mech));
    }
    doc["overall"] = to_string(budget.overall);
    doc["warnings"] = coupling.validity.warnings;
    return doc;
}

}  // namespace

int cmd_validate(const RunManifest& manifest) {
    ParseResult parsed = parse_config_file(manifest.config_path);
    if (!parsed.ok()) {
        for (const auto& e : parsed.errors)
            std::cerr << manifest.config_path << ": error: " << e << "\n";
        return exit_input_error;
    }
    const ValidationReport report = validate_config(parsed.config);
    for (const auto& e : report.errors)
        std::cout << "error: " << e << "\n";
    for (const auto& w : report.warnings)
        std::cout << "warning: " << w << "\n";
    if (report.ok()) {
        std::cout << "config ok: " << parsed.config.ion_count() << " ions, no errors";
        if (!report.warnings.empty())
            std::cout << ", " << report.warnings.size() << " warning(s)";
        std::cout << "\n";
        return exit_ok;
    }
    return exit_input_error;
}

int cmd_budget(const RunManifest& manifest) {
    int code = exit_ok;
    const auto cfg = load_config(manifest, code);
    if (!cfg) return code;

    if (manifest.dump_config) {
        write_output(manifest.output_path, dump_config(*cfg));
        return exit_ok;
    }

    const CouplingResult coupling = coupling_constant(*cfg);
    const ExchangeResult exchange = exchange_time(*cfg);
    const NoiseBudget budget = noise_budget(*cfg);

    const std::string format = pick_format(manifest, "text");
    std::string content;
    if (format == "text") {
        content = budget_text(*cfg, coupling, exchange, budget);
    } else if (format == "json") {
        content = budget_json(*cfg, coupling, exchange, budget).dump(2) + "\n";
    } else if (format == "csv") {
        Table table;
        table.header = {"quantity", "value", "unit"};
        table.rows.push_back({"gamma", format_sci(coupling.gamma), "N/m"});
        table.rows.push_back({"t_ex", format_sci(exchange.t_ex), "s"});
        table.rows.push_back({"theta", format_sci(exchange.theta_principal), "rad"});
        table.rows.push_back({"theta_winding", std::to_string(exchange.winding), ""});
        for (std::size_t i = 0; i < cfg->ion_count(); ++i) {
            const IonLC lc = ion_equivalent_lc(*cfg, i);
            const std::string tag = std::to_string(i);
            table.rows.push_back({"L_" + tag, format_sci(lc.inductance), "H"});
            table.rows.push_back({"C_" + tag, format_sci(lc.capacitance), "F"});
            if (cfg->environment.wire_resistance > 0.0)
                table.rows.push_back({"Q_" + tag, format_sci(quality_factor(*cfg, i)), ""});
        }
        table.rows.push_back({"wire_C", format_sci(wire_capacitance(cfg->geometry)), "F"});
        table.rows.push_back({"induced_current", format_sci(budget.induced_current), "A"});
        table.rows.push_back(
            {"johnson_300K", format_sci(budget.johnson_time_room), "s"});
        table.rows.push_back(
            {"johnson_cryo_4K", format_sci(budget.johnson_time_cryo), "s"});
        for (const auto& entry : budget.entries) {
            table.rows.push_back({entry.mechanism + "_timescale",
                                  format_sci(entry.timescale), "s"});
            table.rows.push_back(
                {entry.mechanism + "_verdict", to_string(entry.verdict), ""});
        }
        table.rows.push_back({"overall", to_string(budget.overall), ""});
        content = table.to_csv();
    } else {
        throw DomainError("unknown --format '" + format + "' (expected csv, json, text)");
    }

    write_output(manifest.output_path, content);
    return budget.overall == Verdict::blocking ? exit_blocking : exit_ok;
}

// -------------------------------------------------------------- simulate

namespace {

Table simulate_classical(const SystemConfig& cfg, const InitialSpec& initial,
                         const std::vector<double>& grid) {
    const TwoModeHamiltonian sys = TwoModeHamiltonian::from_config(cfg);

    ClassicalState state{{0.0, 0.0}, {0.0, 0.0}};
    switch (initial.kind) {
        case InitialSpec::Kind::displaced:
            state.positions[0] = initial.displacement;
            break;
        case InitialSpec::Kind::coherent: {
            const double l =
                std::sqrt(constants::planck_hbar / (2.0 * sys.mass * sys.omega1));
            state.positions[0] = 2.0 * l * initial.amplitude.real();
            state.momenta[0] =
                2.0 * sys.mass * sys.omega1 * l * initial.amplitude.imag();
            break;
        }
        case InitialSpec::Kind::fock:
            // Classical analogue: the displacement holding the same energy.
            state.positions[0] = std::sqrt((2.0 * initial.occupation + 1.0) *
                                           constants::planck_hbar /
                                           (sys.mass * sys.omega1));
            break;
    }

    Table table;
    table.header = {"t_s", "y1_m", "p1_kg_m_s", "y2_m", "p2_kg_m_s",
                    "e1_J", "e2_J", "e_total_J"};
    for (double t : grid) {
        const ClassicalState s = evolve_classical(sys, state, t);
        table.rows.push_back({format_sci(t), format_sci(s.positions[0]),
                              format_sci(s.momenta[0]), format_sci(s.positions[1]),
                              format_sci(s.momenta[1]), format_sci(ion_energy(sys, s, 0)),
                              format_sci(ion_energy(sys, s, 1)),
                              format_sci(classical_energy(sys, s))});
    }
    return table;
}

Table simulate_quantum(const SystemConfig& cfg, const InitialSpec& initial,
                       const std::vector<double>& grid, bool rotating_wave) {
    const TwoModeHamiltonian sys = TwoModeHamiltonian::from_config(cfg);

    int n_max = 20;
    if (initial.kind == InitialSpec::Kind::coherent) {
        // Keep the Poisson tail well inside the truncation.
        n_max = std::max(n_max,
                         static_cast<int>(std::ceil(4.0 * std::norm(initial.amplitude))) + 20);
    } else if (initial.kind == InitialSpec::Kind::fock) {
        n_max = std::max(n_max, initial.occupation + 10);
    }

    const TwoModePropagator propagator(sys, n_max,
                                       rotating_wave
                                           ? TwoModePropagator::Form::rotating_wave
                                           : TwoModePropagator::Form::full);

    QuantumState state = [&] {
        switch (initial.kind) {
            case InitialSpec::Kind::fock:
                return QuantumState::fock(n_max, initial.occupation, 0);
            case InitialSpec::Kind::coherent:
                return QuantumState::coherent(n_max, initial.amplitude, 0.0);
            case InitialSpec::Kind::displaced:
            default: {
                const double l =
                    std::sqrt(constants::planck_hbar / (2.0 * sys.mass * sys.omega1));
                return QuantumState::coherent(n_max, initial.displacement / (2.0 * l),
                                              0.0);
            }
        }
    }();

    Table table;
    table.header = {"t_s", "n1_mean", "n2_mean", "norm", "edge_population"};
    for (double t : grid) {
        const QuantumState s = propagator.evolve(state, t);
        table.rows.push_back({format_sci(t), format_sci(s.mean_occupation(0)),
                              format_sci(s.mean_occupation(1)),
                              format_sci(s.squared_norm()),
                              format_sci(s.edge_population())});
    }
    return table;
}

Table simulate_network(const SystemConfig& cfg, const InitialSpec& initial,
                       const std::vector<double>& grid) {
    const TwoModeHamiltonian sys = TwoModeHamiltonian::from_config(cfg);
    const CircuitEquivalent circ = coupling_network(cfg);

    std::vector<double> positions{0.0, 0.0}, velocities{0.0, 0.0};
    switch (initial.kind) {
        case InitialSpec::Kind::displaced:
            positions[0] = initial.displacement;
            break;
        case InitialSpec::Kind::coherent: {
            const double l =
                std::sqrt(constants::planck_hbar / (2.0 * sys.mass * sys.omega1));
            positions[0] = 2.0 * l * initial.amplitude.real();
            velocities[0] = 2.0 * sys.omega1 * l * initial.amplitude.imag();
            break;
        }
        case InitialSpec::Kind::fock:
            positions[0] = std::sqrt((2.0 * initial.occupation + 1.0) *
                                     constants::planck_hbar / (sys.mass * sys.omega1));
            break;
    }

    const CircuitState start =
        circuit_state_from_mechanical(cfg, circ, positions, velocities);
    const CircuitTrace trace = simulate_circuit(circ, start, grid);

    Table table;
    table.header = {"t_s", "i1_A", "i2_A", "q1_C", "q2_C", "node_V", "energy_J"};
    for (std::size_t k = 0; k < trace.times.size(); ++k) {
        const CircuitState& s = trace.states[k];
        table.rows.push_back(
            {format_sci(trace.times[k]), format_sci(s.branch_currents[0]),
             format_sci(s.branch_currents[1]), format_sci(s.branch_charges[0]),
             format_sci(s.branch_charges[1]), format_sci(s.node_voltage),
             format_sci(circuit_energy(circ, s))});
    }
    return table;
}

}  // namespace

int cmd_simulate(const RunManifest& manifest) {
    int code = exit_ok;
    const auto cfg = load_config(manifest, code);
    if (!cfg) return code;

    const InitialSpec initial = parse_initial(manifest.initial);
    if (manifest.tmax < 0.0)
        throw DomainError("--tmax must be positive (or 0 to span two exchange periods)");
    const double tmax = manifest.samples == 1 ? 0.0
                        : manifest.tmax > 0.0 ? manifest.tmax
                                               : default_tmax(*cfg);
    const std::vector<double> grid = time_grid(tmax, manifest.samples);

    Table table;
    if (manifest.mode == "classical") {
        table = simulate_classical(*cfg, initial, grid);
    } else if (manifest.mode == "quantum") {
        table = simulate_quantum(*cfg, initial, grid, false);
    } else if (manifest.mode == "rwa") {
        table = simulate_quantum(*cfg, initial, grid, true);
    } else if (manifest.mode == "circuit") {
        table = simulate_network(*cfg, initial, grid);
    } else {
        throw DomainError("unknown --mode '" + manifest.mode +
                          "' (expected classical, quantum, rwa, circuit)");
    }

    write_output(manifest.output_path, render(table, pick_format(manifest, "csv")));
    return exit_ok;
}

// ----------------------------------------------------------------- sweep

namespace {

struct SweepAxis {
    std::string name;
    std::vector<double> values;
};

const std::vector<std::string> sweep_axes = {"H", "h0", "L",  "a",    "omega",
                                             "T", "R",  "Rg", "scale"};

SweepAxis parse_axis(const std::string& spec) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos)
        throw DomainError("sweep axis '" + spec + "' must look like AXIS=START:STOP:STEPS");
    SweepAxis axis;
    axis.name = spec.substr(0, eq);
    if (std::find(sweep_axes.begin(), sweep_axes.end(), axis.name) == sweep_axes.end()) {
        std::string names;
        for (const auto& n : sweep_axes) names += (names.empty() ? "" : ", ") + n;
        throw DomainError("unknown sweep axis '" + axis.name + "' (expected one of " +
                          names + ")");
    }

    double start = 0.0, stop = 0.0;
    long steps = 0;
    char c1 = 0, c2 = 0;
    std::istringstream in(spec.substr(eq + 1));
    if (!(in >> start >> c1 >> stop >> c2 >> steps) || c1 != ':' || c2 != ':' ||
        !(in >> std::ws).eof())
        throw DomainError("sweep axis '" + axis.name +
                          "' must look like AXIS=START:STOP:STEPS");
    if (steps < 1 || steps > 1000000)
        throw DomainError("sweep axis '" + axis.name + "': STEPS must be in [1, 1e6]");
    if (steps == 1) {
        axis.values.push_back(start);
    } else {
        for (long k = 0; k < steps; ++k)
            axis.values.push_back(start + (stop - start) * double(k) / double(steps - 1));
    }
    return axis;
}

// Axis values are base SI (m, Hz, K, Ohm); "scale" multiplies all lengths.
SystemConfig apply_axis(SystemConfig cfg, const std::string& axis, double value) {
    if (axis == "H") {
        cfg.geometry.wire_height = value;
    } else if (axis == "a") {
        cfg.geometry.wire_radius = value;
    } else if (axis == "L") {
        cfg.geometry.wire_length = value;
    } else if (axis == "h0") {
        for (auto& h : cfg.geometry.ion_heights) h = value;
    } else if (axis == "omega") {
        cfg.modes = ModeSpec::from_frequencies(
            std::vector<double>(cfg.modes.size(), value));
    } else if (axis == "T") {
        cfg.environment.temperature = value;
    } else if (axis == "R") {
        cfg.environment.wire_resistance = value;
    } else if (axis == "Rg") {
        cfg.environment.leakage_resistance = value;
    } else if (axis == "scale") {
        cfg.geometry.wire_height *= value;
        cfg.geometry.wire_radius *= value;
        cfg.geometry.wire_length *= value;
        for (auto& h : cfg.geometry.ion_heights) h *= value;
        for (auto& d : cfg.geometry.ion_separations) d *= value;
    }
    return cfg;
}

}  // namespace

int cmd_sweep(const RunManifest& manifest) {
    int code = exit_ok;
    const auto base = load_config(manifest, code);
    if (!base) return code;

    if (manifest.sweep.empty())
        throw DomainError("sweep requires --sweep AXIS=START:STOP:STEPS[,AXIS2=...]");

    std::vector<SweepAxis> axes;
    std::size_t start = 0;
    while (start <= manifest.sweep.size()) {
        const auto comma = manifest.sweep.find(',', start);
        const std::string part =
            comma == std::string::npos ? manifest.sweep.substr(start)
                                       : manifest.sweep.substr(start, comma - start);
        if (!part.empty()) axes.push_back(parse_axis(part));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (axes.empty() || axes.size() > 2)
        throw DomainError("sweep takes one or two axes");

    Table table;
    table.header = {};
    for (const auto& axis : axes) table.header.push_back("axis_" + axis.name);
    for (const char* col : {"gamma_N_per_m", "t_ex_s", "quality_factor",
                            "tau_johnson_s", "dissipation_verdict", "johnson_verdict",
                            "leakage_verdict", "overall_verdict"})
        table.header.emplace_back(col);

    const std::size_t outer = axes[0].values.size();
    const std::size_t inner = axes.size() == 2 ? axes[1].values.size() : 1;
    for (std::size_t i = 0; i < outer; ++i) {
        for (std::size_t j = 0; j < inner; ++j) {
            SystemConfig cfg = apply_axis(*base, axes[0].name, axes[0].values[i]);
            if (axes.size() == 2) cfg = apply_axis(cfg, axes[1].name, axes[1].values[j]);

            const ValidationReport report = validate_config(cfg);
            if (!report.ok()) {
                std::ostringstream msg;
                msg << "sweep point " << axes[0].name << "=" << axes[0].values[i];
                if (axes.size() == 2)
                    msg << ", " << axes[1].name << "=" << axes[1].values[j];
                msg << " is invalid:";
                for (const auto& e : report.errors) msg << "\n  " << e;
                throw DomainError(msg.str());
            }

            const CouplingResult coupling = coupling_constant(cfg);
            const NoiseBudget budget = noise_budget(cfg);
            const double q_factor = cfg.environment.wire_resistance > 0.0
                                        ? quality_factor(cfg, 0)
                                        : std::numeric_limits<double>::infinity();

            std::vector<std::string> row;
            row.push_back(format_sci(axes[0].values[i]));
            if (axes.size() == 2) row.push_back(format_sci(axes[1].values[j]));
            row.push_back(format_sci(coupling.gamma));
            row.push_back(format_sci(budget.t_ex));
            row.push_back(format_sci(q_factor));
            row.push_back(format_sci(budget.johnson_time));
            row.push_back(to_string(budget.find("dissipation")->verdict));
            row.push_back(to_string(budget.find("johnson")->verdict));
            row.push_back(to_string(budget.find("leakage")->verdict));
            row.push_back(to_string(budget.overall));
            table.rows.push_back(std::move(row));
        }
    }

    write_output(manifest.output_path, render(table, pick_format(manifest, "csv")));
    return exit_ok;
}

int run_command(const RunManifest& manifest) {
    try {
        if (manifest.command == "validate") return cmd_validate(manifest);
        if (manifest.command == "budget") return cmd_budget(manifest);
        if (manifest.command == "simulate") return cmd_simulate(manifest);
        if (manifest.command == "sweep") return cmd_sweep(manifest);
        std::cerr << "error: unknown command '" << manifest.command << "'\n";
        return exit_input_error;
    } catch (const TruncationLeakError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return exit_numerical;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return exit_numerical;
    }
}

}  // namespace ionwire::cli
