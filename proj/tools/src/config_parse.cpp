#include "config_parse.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include "ionwire/constants.hpp"
#include "ionwire/species.hpp"

namespace ionwire::cli {

namespace {

enum class Dimension { length, frequency, temperature, resistance, rate, dimensionless };

struct UnitEntry {
    const char* symbol;
    double factor;
    bool angular = false;  // frequency units that are already rad/s
};

const UnitEntry* unit_table(Dimension dim, std::size_t& count) {
    static const UnitEntry length[] = {{"nm", 1e-9}, {"um", 1e-6},  {"\xc2\xb5m", 1e-6},
                                       {"mm", 1e-3}, {"cm", 1e-2},  {"m", 1.0}};
    static const UnitEntry frequency[] = {{"Hz", 1.0},   {"kHz", 1e3}, {"MHz", 1e6},
                                          {"GHz", 1e9},  {"rad/s", 1.0, true}};
    static const UnitEntry temperature[] = {{"mK", 1e-3}, {"K", 1.0}};
    static const UnitEntry resistance[] = {{"mOhm", 1e-3}, {"Ohm", 1.0},  {"ohm", 1.0},
                                           {"kOhm", 1e3},  {"MOhm", 1e6}, {"GOhm", 1e9},
                                           {"TOhm", 1e12}};
    static const UnitEntry rate[] = {{"/s", 1.0}, {"1/s", 1.0}, {"quanta/s", 1.0}};
    switch (dim) {
        case Dimension::length: count = std::size(length); return length;
        case Dimension::frequency: count = std::size(frequency); return frequency;
        case Dimension::temperature: count = std::size(temperature); return temperature;
        case Dimension::resistance: count = std::size(resistance); return resistance;
        case Dimension::rate: count = std::size(rate); return rate;
        case Dimension::dimensionless: count = 0; return nullptr;
    }
    count = 0;
    return nullptr;
}

std::string unit_list(Dimension dim) {
    std::size_t count = 0;
    const UnitEntry* table = unit_table(dim, count);
    std::string out;
    for (std::size_t i = 0; i < count; ++i) {
        if (!out.empty()) out += ", ";
        out += table[i].symbol;
    }
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

struct Parser {
    std::vector<std::string> errors;
    std::vector<std::string> warnings;
    int line_no = 0;

    void error(const std::string& what) {
        std::ostringstream msg;
        msg << "line " << line_no << ": " << what;
        errors.push_back(msg.str());
    }

    void error_global(const std::string& what) { errors.push_back(what); }

    // "VALUE [UNIT]" -> SI double. Angular-frequency units bypass the 2*pi.
    std::optional<double> scalar(std::string_view text, Dimension dim,
                                 const std::string& key, bool* was_angular = nullptr) {
        text = trim(text);
        const std::string token(text);
        char* end = nullptr;
        const double value = std::strtod(token.c_str(), &end);
        if (end == token.c_str()) {
            error("key '" + key + "': cannot parse a number from '" + token + "'");
            return std::nullopt;
        }
        std::string_view unit = trim(std::string_view(end));

        if (dim == Dimension::dimensionless) {
            if (!unit.empty()) {
                error("key '" + key + "' is dimensionless; unexpected unit '" +
                      std::string(unit) + "'");
                return std::nullopt;
            }
            return value;
        }
        if (unit.empty()) {
            error("key '" + key + "' needs a unit (one of: " + unit_list(dim) + ")");
            return std::nullopt;
        }
        std::size_t count = 0;
        const UnitEntry* table = unit_table(dim, count);
        for (std::size_t i = 0; i < count; ++i) {
            if (unit == table[i].symbol) {
                if (was_angular) *was_angular = table[i].angular;
                return value * table[i].factor;
            }
        }
        error("key '" + key + "': unknown unit '" + std::string(unit) + "' (expected " +
              unit_list(dim) + ")");
        return std::nullopt;
    }

    std::optional<std::vector<double>> list(std::string_view text, Dimension dim,
                                            const std::string& key,
                                            bool* was_angular = nullptr) {
        std::vector<double> values;
        std::size_t start = 0;
        const std::string s(text);
        while (start <= s.size()) {
            const std::size_t comma = s.find(',', start);
            const std::string_view item =
                comma == std::string::npos
                    ? std::string_view(s).substr(start)
                    : std::string_view(s).substr(start, comma - start);
            const auto v = scalar(item, dim, key, was_angular);
            if (!v) return std::nullopt;
            values.push_back(*v);
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        return values;
    }
};

std::string format_si(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

ParseResult parse_config(std::string_view text) {
    Parser p;
    SystemConfig cfg;

    std::string section;
    std::optional<double> height, radius, length;
    std::optional<std::vector<double>> heights, separations, omegas;
    bool omegas_angular = false;
    std::optional<std::string> species_name;
    std::optional<double> temperature, resistance, leakage, ratio, anomalous;

    std::istringstream stream{std::string(text)};
    std::string raw;
    while (std::getline(stream, raw)) {
        ++p.line_no;
        std::string_view line(raw);
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') {
                p.error("unterminated section header");
                continue;
            }
            section = std::string(trim(line.substr(1, line.size() - 2)));
            if (section != "geometry" && section != "species" && section != "modes" &&
                section != "environment") {
                p.error("unknown section '" + section +
                        "' (expected geometry, species, modes, environment)");
                section.clear();
            }
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            p.error("expected 'key = value'");
            continue;
        }
        const std::string key{trim(line.substr(0, eq))};
        const std::string_view value = trim(line.substr(eq + 1));
        if (section.empty()) {
            p.error("key '" + key + "' appears outside any section");
            continue;
        }

        if (section == "geometry") {
            if (key == "H") height = p.scalar(value, Dimension::length, key);
            else if (key == "a") radius = p.scalar(value, Dimension::length, key);
            else if (key == "L") length = p.scalar(value, Dimension::length, key);
            else if (key == "h0") heights = p.list(value, Dimension::length, key);
            else if (key == "d") separations = p.list(value, Dimension::length, key);
            else p.error("unknown key '" + key + "' in [geometry] (expected H, a, L, h0, d)");
        } else if (section == "species") {
            if (key == "name") species_name = std::string(value);
            else p.error("unknown key '" + key + "' in [species] (expected name)");
        } else if (section == "modes") {
            if (key == "omega")
                omegas = p.list(value, Dimension::frequency, key, &omegas_angular);
            else p.error("unknown key '" + key + "' in [modes] (expected omega)");
        } else {  // environment
            if (key == "T") temperature = p.scalar(value, Dimension::temperature, key);
            else if (key == "R") resistance = p.scalar(value, Dimension::resistance, key);
            else if (key == "Rg") leakage = p.scalar(value, Dimension::resistance, key);
            else if (key == "resistivity_ratio")
                ratio = p.scalar(value, Dimension::dimensionless, key);
            else if (key == "anomalous_heating")
                anomalous = p.scalar(value, Dimension::rate, key);
            else
                p.error("unknown key '" + key +
                        "' in [environment] (expected T, R, Rg, resistivity_ratio, "
                        "anomalous_heating)");
        }
    }

    if (!height) p.error_global("missing required key 'H' in section [geometry]");
    if (!radius) p.error_global("missing required key 'a' in section [geometry]");
    if (!length) p.error_global("missing required key 'L' in section [geometry]");
    if (!heights) p.error_global("missing required key 'h0' in section [geometry]");
    if (!omegas) p.error_global("missing required key 'omega' in section [modes]");

    ParseResult result;
    result.errors = std::move(p.errors);
    result.warnings = std::move(p.warnings);
    if (!result.errors.empty()) return result;

    cfg.geometry.wire_height = *height;
    cfg.geometry.wire_radius = *radius;
    cfg.geometry.wire_length = *length;
    cfg.geometry.ion_heights = *heights;
    if (separations) cfg.geometry.ion_separations = *separations;

    // A single frequency is shared across all ions.
    std::vector<double> w = *omegas;
    if (w.size() == 1 && heights->size() > 1) w.assign(heights->size(), w[0]);
    if (omegas_angular) {
        cfg.modes.angular_frequencies = std::move(w);
    } else {
        cfg.modes = ModeSpec::from_frequencies(w);
    }

    try {
        cfg.species = species_constants(species_name.value_or("Ca40+"));
    } catch (const std::invalid_argument& e) {
        result.errors.emplace_back(e.what());
        return result;
    }

    if (temperature) cfg.environment.temperature = *temperature;
    if (resistance) cfg.environment.wire_resistance = *resistance;
    if (leakage) cfg.environment.leakage_resistance = *leakage;
    if (ratio) cfg.environment.resistivity_ratio = *ratio;
    if (anomalous) cfg.environment.anomalous_heating_rate = *anomalous;

    result.config = std::move(cfg);
    return result;
}

ParseResult parse_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        ParseResult result;
        result.errors.push_back("cannot open config file '" + path + "'");
        return result;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

std::string dump_config(const SystemConfig& cfg) {
    std::ostringstream out;
    out << "[geometry]\n";
    out << "H = " << format_si(cfg.geometry.wire_height) << " m\n";
    out << "a = " << format_si(cfg.geometry.wire_radius) << " m\n";
    out << "L = " << format_si(cfg.geometry.wire_length) << " m\n";
    out << "h0 = ";
    for (std::size_t i = 0; i < cfg.geometry.ion_heights.size(); ++i)
        out << (i ? ", " : "") << format_si(cfg.geometry.ion_heights[i]) << " m";
    out << "\n";
    if (!cfg.geometry.ion_separations.empty()) {
        out << "d = ";
        for (std::size_t i = 0; i < cfg.geometry.ion_separations.size(); ++i)
            out << (i ? ", " : "") << format_si(cfg.geometry.ion_separations[i]) << " m";
        out << "\n";
    }
    out << "\n[species]\n";
    out << "name = " << cfg.species.name << "\n";
    out << "\n[modes]\n";
    out << "omega = ";
    for (std::size_t i = 0; i < cfg.modes.size(); ++i)
        out << (i ? ", " : "") << format_si(cfg.modes.angular_frequencies[i]) << " rad/s";
    out << "\n";
    out << "\n[environment]\n";
    out << "T = " << format_si(cfg.environment.temperature) << " K\n";
    out << "R = " << format_si(cfg.environment.wire_resistance) << " Ohm\n";
    out << "Rg = " << format_si(cfg.environment.leakage_resistance) << " Ohm\n";
    out << "resistivity_ratio = " << format_si(cfg.environment.resistivity_ratio) << "\n";
    if (cfg.environment.anomalous_heating_rate)
        out << "anomalous_heating = " << format_si(*cfg.environment.anomalous_heating_rate)
            << " /s\n";
    return out.str();
}

}  // namespace ionwire::cli
