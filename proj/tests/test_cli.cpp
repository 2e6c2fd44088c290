#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "commands.hpp"
#include "config_parse.hpp"
#include "ionwire/ionwire.hpp"
#include "output.hpp"
#include "test_helpers.hpp"

using namespace ionwire;
using namespace ionwire::cli;
using doctest::Approx;

namespace {

namespace fs = std::filesystem;

const char* const kBaselineText = R"(# reference pair
[geometry]
H  = 200 um
a  = 12.5 um
L  = 10 mm
h0 = 150 um, 150 um
d  = 2 mm

[species]
name = Ca40+

[modes]
omega = 1 MHz

[environment]
T  = 300 K
R  = 0.6 Ohm
Rg = 1e13 Ohm
resistivity_ratio = 50
)";

fs::path workspace() {
    const fs::path dir = fs::temp_directory_path() / "ionwire_cli_tests";
    fs::create_directories(dir);
    return dir;
}

fs::path write_file(const std::string& name, const std::string& text) {
    const fs::path path = workspace() / name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
    return path;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::vector<std::string>> read_csv(const fs::path& path) {
    std::ifstream in(path);
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> fields;
        std::string field;
        std::istringstream ls(line);
        while (std::getline(ls, field, ',')) fields.push_back(field);
        rows.push_back(std::move(fields));
    }
    return rows;
}

bool same_config(const SystemConfig& a, const SystemConfig& b) {
    return a.species.name == b.species.name && a.species.mass == b.species.mass &&
           a.species.charge == b.species.charge &&
           a.geometry.wire_height == b.geometry.wire_height &&
           a.geometry.wire_radius == b.geometry.wire_radius &&
           a.geometry.wire_length == b.geometry.wire_length &&
           a.geometry.ion_heights == b.geometry.ion_heights &&
           a.geometry.ion_separations == b.geometry.ion_separations &&
           a.modes.angular_frequencies == b.modes.angular_frequencies &&
           a.environment.temperature == b.environment.temperature &&
           a.environment.wire_resistance == b.environment.wire_resistance &&
           a.environment.leakage_resistance == b.environment.leakage_resistance &&
           a.environment.resistivity_ratio == b.environment.resistivity_ratio &&
           a.environment.anomalous_heating_rate == b.environment.anomalous_heating_rate;
}

RunManifest manifest_for(const std::string& command, const fs::path& config,
                         const fs::path& output, const std::string& format = "csv") {
    RunManifest m;
    m.command = command;
    m.config_path = config.string();
    m.output_path = output.string();
    m.format = format;
    return m;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("config parser reads the reference file") {
    const ParseResult parsed = parse_config(kBaselineText);
    REQUIRE(parsed.ok());
    const SystemConfig& cfg = parsed.config;

    CHECK(cfg.geometry.wire_height == Approx(200e-6).epsilon(1e-15));
    CHECK(cfg.geometry.wire_radius == Approx(12.5e-6).epsilon(1e-15));
    CHECK(cfg.geometry.wire_length == Approx(10e-3).epsilon(1e-15));
    REQUIRE(cfg.geometry.ion_heights.size() == 2);
    CHECK(cfg.geometry.ion_heights[0] == Approx(150e-6).epsilon(1e-15));
    REQUIRE(cfg.geometry.ion_separations.size() == 1);
    CHECK(cfg.geometry.ion_separations[0] == Approx(2e-3).epsilon(1e-15));
    CHECK(cfg.species.name == "Ca40+");
    REQUIRE(cfg.modes.size() == 2);  // single frequency broadcast to both ions
    CHECK(cfg.modes.frequency(0) == Approx(1e6).epsilon(1e-14));
    CHECK(cfg.modes.frequency(1) == Approx(1e6).epsilon(1e-14));
    CHECK(cfg.environment.temperature == 300.0);
    CHECK(cfg.environment.wire_resistance == Approx(0.6).epsilon(1e-15));
    CHECK(cfg.environment.leakage_resistance == Approx(1e13).epsilon(1e-15));
    CHECK(cfg.environment.resistivity_ratio == 50.0);
    CHECK_FALSE(cfg.environment.anomalous_heating_rate.has_value());
}

TEST_CASE("units are converted, not assumed") {
    const auto parse_geometry_height = [](const std::string& value) {
        const std::string text = "[geometry]\nH = " + value +
                                 "\na = 12.5 um\nL = 10 mm\nh0 = 150 um, 150 um\n"
                                 "[modes]\nomega = 1 MHz\n";
        const ParseResult parsed = parse_config(text);
        REQUIRE_MESSAGE(parsed.ok(), value);
        return parsed.config.geometry.wire_height;
    };
    CHECK(parse_geometry_height("200 um") == Approx(2e-4).epsilon(1e-15));
    CHECK(parse_geometry_height("0.2 mm") == Approx(2e-4).epsilon(1e-15));
    CHECK(parse_geometry_height("2e-4 m") == Approx(2e-4).epsilon(1e-15));
    CHECK(parse_geometry_height("0.02 cm") == Approx(2e-4).epsilon(1e-15));
    CHECK(parse_geometry_height("200000 nm") == Approx(2e-4).epsilon(1e-15));

    const auto parse_env = [](const std::string& line) {
        const std::string text =
            "[geometry]\nH = 200 um\na = 12.5 um\nL = 10 mm\nh0 = 150 um, 150 um\n"
            "[modes]\nomega = 1 MHz\n[environment]\n" +
            line + "\n";
        const ParseResult parsed = parse_config(text);
        REQUIRE_MESSAGE(parsed.ok(), line);
        return parsed.config;
    };
    CHECK(parse_env("T = 300000 mK").environment.temperature == Approx(300.0).epsilon(1e-15));
    CHECK(parse_env("R = 600 mOhm").environment.wire_resistance == Approx(0.6).epsilon(1e-15));
    CHECK(parse_env("Rg = 10 TOhm").environment.leakage_resistance == Approx(1e13).epsilon(1e-15));
    CHECK(parse_env("anomalous_heating = 0.5 /s").environment.anomalous_heating_rate ==
          0.5);

    const auto parse_omega = [](const std::string& value) {
        const std::string text =
            "[geometry]\nH = 200 um\na = 12.5 um\nL = 10 mm\nh0 = 150 um, 150 um\n"
            "[modes]\nomega = " +
            value + "\n";
        const ParseResult parsed = parse_config(text);
        REQUIRE_MESSAGE(parsed.ok(), value);
        return parsed.config.modes.angular_frequencies[0];
    };
    const double w = 2.0 * constants::pi * 1e6;
    CHECK(parse_omega("1 MHz") == Approx(w).epsilon(1e-14));
    CHECK(parse_omega("1000 kHz") == Approx(w).epsilon(1e-14));
    CHECK(parse_omega("1e6 Hz") == Approx(w).epsilon(1e-14));
    // rad/s is taken as angular frequency directly
    CHECK(parse_omega("6283185.307179586 rad/s") == Approx(w).epsilon(1e-14));
}

TEST_CASE("parse errors carry line numbers and name the problem") {
    auto errors_of = [](const std::string& text) {
        const ParseResult parsed = parse_config(text);
        CHECK_FALSE(parsed.ok());
        std::string joined;
        for (const auto& e : parsed.errors) joined += e + "\n";
        return joined;
    };

    SUBCASE("missing unit") {
        const std::string msg = errors_of("[geometry]\nH = 200\n");
        CHECK(msg.find("line 2") != std::string::npos);
        CHECK(msg.find("unit") != std::string::npos);
    }
    SUBCASE("unknown key") {
        const std::string msg = errors_of("[geometry]\nbogus = 1 m\n");
        CHECK(msg.find("bogus") != std::string::npos);
    }
    SUBCASE("unknown section") {
        const std::string msg = errors_of("[warp_drive]\nfactor = 9\n");
        CHECK(msg.find("warp_drive") != std::string::npos);
    }
    SUBCASE("unknown species") {
        const std::string msg = errors_of(
            "[geometry]\nH = 200 um\na = 12.5 um\nL = 10 mm\nh0 = 150 um, 150 um\n"
            "[species]\nname = Xx99+\n[modes]\nomega = 1 MHz\n");
        CHECK(msg.find("Xx99+") != std::string::npos);
    }
    SUBCASE("missing required keys") {
        const std::string msg = errors_of("[geometry]\nH = 200 um\n");
        CHECK(msg.find("missing") != std::string::npos);
    }
    SUBCASE("unparseable number") {
        const std::string msg = errors_of("[geometry]\nH = fast um\n");
        CHECK(msg.find("line 2") != std::string::npos);
    }
}

TEST_CASE("dumped configs reparse to the identical system") {
    const ParseResult first = parse_config(kBaselineText);
    REQUIRE(first.ok());
    const std::string dumped = dump_config(first.config);
    const ParseResult second = parse_config(dumped);
    REQUIRE(second.ok());
    CHECK(same_config(first.config, second.config));

    // also for a config exercising optional fields
    SystemConfig cfg = first.config;
    cfg.environment.anomalous_heating_rate = 0.37;
    cfg.geometry.ion_separations.clear();
    const ParseResult third = parse_config(dump_config(cfg));
    REQUIRE(third.ok());
    CHECK(same_config(cfg, third.config));
}

TEST_CASE("validate command reports and exits by contract") {
    const fs::path good = write_file("good.cfg", kBaselineText);
    RunManifest m;
    m.command = "validate";
    m.config_path = good.string();
    CHECK(run_command(m) == exit_ok);

    m.config_path = (workspace() / "no_such_file.cfg").string();
    CHECK(run_command(m) == exit_input_error);

    std::string bad = kBaselineText;
    bad.replace(bad.find("h0 = 150 um, 150 um"), 19, "h0 = 200 um, 150 um");
    m.config_path = write_file("ion_at_wire.cfg", bad).string();
    CHECK(run_command(m) == exit_input_error);
}

TEST_CASE("budget command writes the requested format") {
    const fs::path config = write_file("budget.cfg", kBaselineText);

    SUBCASE("json") {
        const fs::path out = workspace() / "budget.json";
        CHECK(run_command(manifest_for("budget", config, out, "json")) == exit_ok);
        const nlohmann::json doc = nlohmann::json::parse(read_file(out));
        CHECK(doc["gamma_N_per_m"].get<double>() ==
              Approx(7.020004684268387e-18).epsilon(1e-9));
        CHECK(doc["t_ex_s"].get<double>() == Approx(0.18659292497679458).epsilon(1e-9));
        CHECK(doc["overall"].get<std::string>() == "marginal");
        CHECK(doc["ions"].size() == 2);
    }
    SUBCASE("csv") {
        const fs::path out = workspace() / "budget.csv";
        CHECK(run_command(manifest_for("budget", config, out, "csv")) == exit_ok);
        const auto rows = read_csv(out);
        REQUIRE(rows.size() > 3);
        CHECK(rows[0] == std::vector<std::string>{"quantity", "value", "unit"});
    }
    SUBCASE("text") {
        const fs::path out = workspace() / "budget.txt";
        CHECK(run_command(manifest_for("budget", config, out, "text")) == exit_ok);
        const std::string text = read_file(out);
        CHECK(text.find("exchange time") != std::string::npos);
        CHECK(text.find("marginal") != std::string::npos);
    }
    SUBCASE("unknown format is an input error") {
        const fs::path out = workspace() / "budget.xml";
        CHECK(run_command(manifest_for("budget", config, out, "xml")) ==
              exit_input_error);
        CHECK_FALSE(fs::exists(out));
    }
}

TEST_CASE("budget command gates on blocking verdicts") {
    std::string leaky = kBaselineText;
    leaky.replace(leaky.find("Rg = 1e13 Ohm"), 13, "Rg = 1e8 Ohm ");
    const fs::path config = write_file("leaky.cfg", leaky);
    const fs::path out = workspace() / "leaky.json";
    CHECK(run_command(manifest_for("budget", config, out, "json")) == exit_blocking);
    // the report is still written: a blocking budget is an answer, not a crash
    const nlohmann::json doc = nlohmann::json::parse(read_file(out));
    CHECK(doc["overall"].get<std::string>() == "blocking");
}

TEST_CASE("dump-config echo reparses exactly") {
    const fs::path config = write_file("echo.cfg", kBaselineText);
    const fs::path out = workspace() / "echo_out.cfg";
    RunManifest m = manifest_for("budget", config, out);
    m.dump_config = true;
    CHECK(run_command(m) == exit_ok);

    const ParseResult reparsed = parse_config(read_file(out));
    REQUIRE(reparsed.ok());
    CHECK(same_config(reparsed.config, parse_config(kBaselineText).config));
}

TEST_CASE("simulate writes deterministic classical traces") {
    const fs::path config = write_file("sim.cfg", kBaselineText);
    const fs::path out_a = workspace() / "trace_a.csv";
    const fs::path out_b = workspace() / "trace_b.csv";

    RunManifest m = manifest_for("simulate", config, out_a);
    m.mode = "classical";
    m.initial = "displaced:1e-9";
    m.samples = 9;
    CHECK(run_command(m) == exit_ok);
    m.output_path = out_b.string();
    CHECK(run_command(m) == exit_ok);

    const std::string bytes_a = read_file(out_a);
    CHECK_FALSE(bytes_a.empty());
    CHECK(bytes_a == read_file(out_b));  // byte-identical on identical inputs

    const auto rows = read_csv(out_a);
    REQUIRE(rows.size() == 10);  // header + 9 samples
    CHECK(rows[0][0] == "t_s");
    CHECK(std::stod(rows[1][0]) == 0.0);
    CHECK(std::stod(rows[1][1]) == Approx(1e-9).epsilon(1e-9));  // y1(0)
    // default span is two exchange periods; the motion returns at the end
    CHECK(std::stod(rows[9][1]) == Approx(1e-9).epsilon(1e-3));
    // halfway through (one exchange period) ion 1 is at rest at the origin
    CHECK(std::abs(std::stod(rows[5][1])) < 1e-13);
}

TEST_CASE("simulate rwa trace shows the swap and the revival") {
    const fs::path config = write_file("rwa.cfg", kBaselineText);
    const fs::path out = workspace() / "rwa.csv";
    RunManifest m = manifest_for("simulate", config, out);
    m.mode = "rwa";
    m.initial = "fock:1";
    m.samples = 5;  // rows at 0, t_ex/2, t_ex, 3 t_ex/2, 2 t_ex
    CHECK(run_command(m) == exit_ok);

    const auto rows = read_csv(out);
    REQUIRE(rows.size() == 6);
    CHECK(std::stod(rows[1][1]) == Approx(1.0).epsilon(1e-9));  // n1 at t = 0
    CHECK(std::stod(rows[3][1]) < 1e-9);                        // swapped at t_ex
    CHECK(std::stod(rows[3][2]) == Approx(1.0).epsilon(1e-9));
    CHECK(std::stod(rows[5][1]) == Approx(1.0).epsilon(1e-9));  // revived at 2 t_ex
    for (std::size_t k = 1; k < rows.size(); ++k)
        CHECK(std::stod(rows[k][3]) == Approx(1.0).epsilon(1e-9));  // norm column
}

TEST_CASE("a single sample is the initial state") {
    const fs::path config = write_file("single.cfg", kBaselineText);
    const fs::path out = workspace() / "single.csv";
    RunManifest m = manifest_for("simulate", config, out);
    m.mode = "quantum";
    m.initial = "fock:2";
    m.samples = 1;
    CHECK(run_command(m) == exit_ok);

    const auto rows = read_csv(out);
    REQUIRE(rows.size() == 2);
    CHECK(std::stod(rows[1][0]) == 0.0);
    CHECK(std::stod(rows[1][1]) == Approx(2.0).epsilon(1e-12));
    CHECK(std::stod(rows[1][2]) == Approx(0.0).scale(1.0).epsilon(1e-12));
}

TEST_CASE("classical and circuit traces tell one story") {
    const fs::path config = write_file("cross.cfg", kBaselineText);
    const fs::path out_mech = workspace() / "cross_mech.csv";
    const fs::path out_circ = workspace() / "cross_circ.csv";

    RunManifest m = manifest_for("simulate", config, out_mech);
    m.initial = "displaced:1e-9";
    m.samples = 101;
    m.mode = "classical";
    CHECK(run_command(m) == exit_ok);
    m.mode = "circuit";
    m.output_path = out_circ.string();
    CHECK(run_command(m) == exit_ok);

    const auto mech = read_csv(out_mech);
    const auto circ = read_csv(out_circ);
    REQUIRE(mech.size() == circ.size());

    const SystemConfig cfg = testing::baseline_config();
    const CouplingResult coupling = coupling_constant(cfg);
    const double kappa =
        cfg.species.charge * coupling.beta[0] / cfg.geometry.wire_height;

    // currents are scaled velocities: i_1 = kappa p_1 / m. The run keeps the
    // configured 0.6 Ohm, whose damping over 2 t_ex is ~1e-5 of amplitude, so
    // compare at the permille level.
    double peak = 0.0;
    for (std::size_t k = 1; k < mech.size(); ++k)
        peak = std::max(peak,
                        std::abs(kappa * std::stod(mech[k][2]) / cfg.species.mass));
    for (std::size_t k = 1; k < mech.size(); ++k) {
        const double expected = kappa * std::stod(mech[k][2]) / cfg.species.mass;
        const double got = std::stod(circ[k][1]);
        CHECK(std::abs(got - expected) / peak < 1e-3);
    }
}

TEST_CASE("sweep scaling laws come out of the table") {
    const fs::path config = write_file("sweep.cfg", kBaselineText);

    SUBCASE("halving the geometry divides the exchange time by eight") {
        const fs::path out = workspace() / "sweep_scale.csv";
        RunManifest m = manifest_for("sweep", config, out);
        m.sweep = "scale=1:0.5:2";
        CHECK(run_command(m) == exit_ok);
        const auto rows = read_csv(out);
        REQUIRE(rows.size() == 3);
        const double t_full = std::stod(rows[1][2]);
        const double t_half = std::stod(rows[2][2]);
        CHECK(t_full / t_half == Approx(8.0).epsilon(1e-6));
    }
    SUBCASE("exchange time is linear in the mode frequency") {
        const fs::path out = workspace() / "sweep_omega.csv";
        RunManifest m = manifest_for("sweep", config, out);
        m.sweep = "omega=0.5e6:5e6:10";
        CHECK(run_command(m) == exit_ok);
        const auto rows = read_csv(out);
        REQUIRE(rows.size() == 11);
        double sxx = 0.0, sxy = 0.0;
        for (std::size_t k = 1; k < rows.size(); ++k) {
            const double x = std::stod(rows[k][0]);
            const double y = std::stod(rows[k][2]);
            sxx += x * x;
            sxy += x * y;
        }
        const double slope = sxy / sxx;
        // the table carries 9 significant digits, so the fit can only be
        // checked to the printed rounding, not to the library's 1e-9
        for (std::size_t k = 1; k < rows.size(); ++k) {
            const double x = std::stod(rows[k][0]);
            const double y = std::stod(rows[k][2]);
            CHECK(std::abs(y - slope * x) / y < 1e-7);
        }
    }
    SUBCASE("temperature sweep scales the johnson time inversely") {
        const fs::path out = workspace() / "sweep_t.csv";
        RunManifest m = manifest_for("sweep", config, out);
        m.sweep = "T=4:300:2";
        CHECK(run_command(m) == exit_ok);
        const auto rows = read_csv(out);
        REQUIRE(rows.size() == 3);
        CHECK(std::stod(rows[1][4]) / std::stod(rows[2][4]) ==
              Approx(75.0).epsilon(1e-9));
    }
    SUBCASE("cryogenic corner of a two-axis sweep gains the resistivity ratio too") {
        const fs::path out = workspace() / "sweep_tr.csv";
        RunManifest m = manifest_for("sweep", config, out);
        m.sweep = "T=4:300:2,R=0.012:0.6:2";
        CHECK(run_command(m) == exit_ok);
        const auto rows = read_csv(out);
        REQUIRE(rows.size() == 5);
        // rows: (4, 0.012), (4, 0.6), (300, 0.012), (300, 0.6)
        CHECK(std::stod(rows[1][5]) / std::stod(rows[4][5]) ==
              Approx(75.0 * 50.0).epsilon(1e-9));
    }
    SUBCASE("unknown axis is an input error") {
        RunManifest m = manifest_for("sweep", config, workspace() / "nope.csv");
        m.sweep = "warp=1:2:3";
        CHECK(run_command(m) == exit_input_error);
    }
    SUBCASE("grid points that violate the geometry fail loudly") {
        RunManifest m = manifest_for("sweep", config, workspace() / "nope2.csv");
        m.sweep = "h0=100e-6:300e-6:5";  // upper end is above the wire
        CHECK(run_command(m) == exit_input_error);
    }
}

TEST_CASE("no partial output file survives a failed write") {
    const fs::path config = write_file("atomic.cfg", kBaselineText);
    const fs::path missing_dir = workspace() / "no_such_dir" / "out.csv";
    RunManifest m = manifest_for("budget", config, missing_dir);
    CHECK(run_command(m) != exit_ok);
    CHECK_FALSE(fs::exists(missing_dir));
    CHECK_FALSE(fs::exists(missing_dir.parent_path()));
}

TEST_CASE("malformed simulate requests exit with the input-error code") {
    const fs::path config = write_file("malformed.cfg", kBaselineText);
    const fs::path out = workspace() / "malformed.csv";

    RunManifest m = manifest_for("simulate", config, out);
    SUBCASE("unknown mode") { m.mode = "hydrodynamic"; }
    SUBCASE("unknown initial kind") { m.initial = "squeezed:0.3"; }
    SUBCASE("initial with wrong arity") { m.initial = "coherent:1:2:3"; }
    SUBCASE("negative fock occupation") { m.initial = "fock:-2"; }
    SUBCASE("unparseable displacement") { m.initial = "displaced:big"; }
    SUBCASE("negative time span") { m.tmax = -1.0; }
    SUBCASE("zero samples") { m.samples = 0; }
    CHECK(run_command(m) == exit_input_error);
    CHECK_FALSE(fs::exists(out));
}

}  // TEST_SUITE
