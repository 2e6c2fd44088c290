#include "ionwire/circuit.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "ionwire/constants.hpp"
#include "ionwire/electrostatics.hpp"
#include "ionwire/errors.hpp"

namespace ionwire {

namespace {

void require(bool cond, const char* what) {
    if (!cond) throw DomainError(what);
}

void require_two_ion_config(const SystemConfig& cfg, const char* op) {
    if (cfg.ion_count() != 2) {
        std::ostringstream msg;
        msg << op << ": exactly two ions required, got " << cfg.ion_count();
        throw DomainError(msg.str());
    }
}

double beta_for_ion(const SystemConfig& cfg, std::size_t i) {
    const double alpha = geometry_alpha(cfg.geometry.wire_height, cfg.geometry.wire_radius);
    return geometry_beta(cfg.geometry.wire_height, cfg.geometry.ion_heights[i], alpha);
}

// Simulated branch capacitance: C_i^br when set, else the textbook C_i.
double branch_cap(const CircuitEquivalent& circ, std::size_t i) {
    return circ.branch_capacitance.empty() ? circ.ion_capacitance[i]
                                           : circ.branch_capacitance[i];
}

// State layout: x = (I_1..I_N, q_1..q_N, q_C).
Eigen::MatrixXd network_matrix(const CircuitEquivalent& circ) {
    const Eigen::Index n = Eigen::Index(circ.branch_count());
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2 * n + 1, 2 * n + 1);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double L = circ.ion_inductance[std::size_t(i)];
        for (Eigen::Index j = 0; j < n; ++j) m(i, j) = -circ.wire_resistance / L;
        m(i, n + i) = -1.0 / (L * branch_cap(circ, std::size_t(i)));
        m(i, 2 * n) = 1.0 / (L * circ.wire_capacitance);
        m(n + i, i) = 1.0;
        m(2 * n, i) = -1.0;
    }
    if (std::isfinite(circ.leakage_resistance))
        m(2 * n, 2 * n) = -1.0 / (circ.wire_capacitance * circ.leakage_resistance);
    return m;
}

void validate_network(const CircuitEquivalent& circ) {
    const std::size_t n = circ.branch_count();
    require(n >= 1, "simulate_circuit: at least one branch required");
    require(circ.ion_capacitance.size() == n,
            "simulate_circuit: capacitance/inductance count mismatch");
    require(circ.branch_capacitance.empty() || circ.branch_capacitance.size() == n,
            "simulate_circuit: branch capacitance count mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        require(circ.ion_inductance[i] > 0.0, "simulate_circuit: inductances must be positive");
        require(circ.ion_capacitance[i] > 0.0, "simulate_circuit: capacitances must be positive");
        require(branch_cap(circ, i) > 0.0, "simulate_circuit: branch capacitances must be positive");
    }
    require(circ.wire_capacitance > 0.0, "simulate_circuit: wire capacitance must be positive");
    require(circ.wire_resistance >= 0.0, "simulate_circuit: wire resistance must be nonnegative");
    require(circ.leakage_resistance > 0.0, "simulate_circuit: leakage resistance must be positive");
}

}  // namespace

IonLC ion_equivalent_lc(const SystemConfig& cfg, std::size_t ion_index) {
    require(ion_index < cfg.ion_count(), "ion_equivalent_lc: ion index out of range");
    const double beta = beta_for_ion(cfg, ion_index);
    const double H = cfg.geometry.wire_height;
    const double q = cfg.species.charge;
    const double omega = cfg.modes.angular_frequencies.at(ion_index);
    require(omega > 0.0, "ion_equivalent_lc: secular frequency must be positive");

    IonLC lc;
    lc.inductance = cfg.species.mass * H * H / (q * q * beta * beta);
    lc.capacitance = 1.0 / (omega * omega * lc.inductance);
    return lc;
}

double wire_capacitance(const TrapGeometry& geometry) {
    const double alpha = geometry_alpha(geometry.wire_height, geometry.wire_radius);
    require(geometry.wire_length > 0.0, "wire_capacitance: wire length must be positive");
    return 2.0 * constants::pi * constants::vacuum_permittivity * geometry.wire_length /
           alpha;
}

double quality_factor(const SystemConfig& cfg, std::size_t ion_index) {
    const double R = cfg.environment.wire_resistance;
    if (R == 0.0)
        throw DomainError(
            "quality_factor: wire resistance is zero, so Q is infinite; dissipation and "
            "Johnson-noise timescales are unbounded for this config");
    require(R > 0.0, "quality_factor: wire resistance must be nonnegative");
    const IonLC lc = ion_equivalent_lc(cfg, ion_index);
    return std::sqrt(lc.inductance / lc.capacitance) / R;
}

double exchange_rate_circuit(const SystemConfig& cfg) {
    require_two_ion_config(cfg, "exchange_rate_circuit");
    const double w1 = cfg.modes.angular_frequencies[0];
    const double w2 = cfg.modes.angular_frequencies[1];
    if (std::abs(w1 - w2) > 1e-9 * std::max(w1, w2))
        throw NonResonantError(
            "exchange_rate_circuit: mode frequencies differ; the capacitance-ratio rate "
            "assumes resonance - use simulate_circuit for detuned pairs");

    const IonLC lc1 = ion_equivalent_lc(cfg, 0);
    const IonLC lc2 = ion_equivalent_lc(cfg, 1);
    const double c_wire = wire_capacitance(cfg.geometry);
    const double nu = cfg.modes.frequency(0);
    return 2.0 * nu * std::sqrt(lc1.capacitance * lc2.capacitance) / c_wire;
}

CircuitEquivalent coupling_network(const SystemConfig& cfg) {
    require_two_ion_config(cfg, "coupling_network");

    CircuitEquivalent circ;
    circ.wire_capacitance = wire_capacitance(cfg.geometry);
    circ.wire_resistance = cfg.environment.wire_resistance;
    circ.leakage_resistance = cfg.environment.leakage_resistance;

    for (std::size_t i = 0; i < 2; ++i) {
        const IonLC lc = ion_equivalent_lc(cfg, i);
        circ.ion_inductance.push_back(lc.inductance);
        circ.ion_capacitance.push_back(lc.capacitance);

        // The wire capacitance pulls the loaded branch resonance upward; the
        // secular frequency is the loaded value, so the bare branch is detuned
        // to 1/(L C^br) = omega^2 - 1/(L C). Without this the simulated network
        // would drift an O(1) carrier phase against the mechanical motion over
        // one exchange.
        const double omega = cfg.modes.angular_frequencies[i];
        const double bare = omega * omega - 1.0 / (lc.inductance * circ.wire_capacitance);
        require(bare > 0.0,
                "coupling_network: wire capacitance loading exceeds the branch resonance; "
                "the lumped network cannot represent this coupling strength");
        circ.branch_capacitance.push_back(1.0 / (lc.inductance * bare));
    }
    return circ;
}

CircuitTrace simulate_circuit(const CircuitEquivalent& circ, const CircuitState& initial,
                              std::span<const double> times) {
    validate_network(circ);
    const std::size_t n = circ.branch_count();
    require(initial.branch_currents.size() == n && initial.branch_charges.size() == n,
            "simulate_circuit: initial state size does not match branch count");

    double current_sum = 0.0;
    for (double i : initial.branch_currents) current_sum += i;

    const Eigen::Index dim = Eigen::Index(2 * n + 1);
    Eigen::VectorXd x0(dim);
    for (std::size_t i = 0; i < n; ++i) {
        x0(Eigen::Index(i)) = initial.branch_currents[i];
        x0(Eigen::Index(n + i)) = initial.branch_charges[i];
    }
    // Recover the wire-capacitor charge from the node voltage:
    // V = q_C/C - R * sum(I).
    x0(dim - 1) = circ.wire_capacitance *
                  (initial.node_voltage + circ.wire_resistance * current_sum);

    double previous_t = 0.0;
    for (double t : times) {
        require(t >= 0.0, "simulate_circuit: sample times must be nonnegative");
        require(t >= previous_t, "simulate_circuit: sample times must be nondecreasing");
        previous_t = t;
    }

    const Eigen::MatrixXd m = network_matrix(circ);

    // Energy-weighted similarity scaling: sqrt(L_i)*I_i, q_i/sqrt(C_i^br),
    // q_C/sqrt(C). In these coordinates the conservative part of the network
    // matrix is antisymmetric, so its eigenvector basis is near-orthogonal and
    // the spectral route below stays accurate even though the raw state
    // components span many decades.
    Eigen::VectorXd d(dim);
    for (std::size_t i = 0; i < n; ++i) {
        d(Eigen::Index(i)) = std::sqrt(circ.ion_inductance[i]);
        d(Eigen::Index(n + i)) = 1.0 / std::sqrt(branch_cap(circ, i));
    }
    d(dim - 1) = 1.0 / std::sqrt(circ.wire_capacitance);
    const Eigen::MatrixXd scaled =
        d.asDiagonal() * m * d.cwiseInverse().asDiagonal();

    CircuitTrace trace;
    trace.times.assign(times.begin(), times.end());
    trace.states.reserve(times.size());

    const auto emit = [&](const Eigen::VectorXd& x) {
        CircuitState sample;
        sample.branch_currents.resize(n);
        sample.branch_charges.resize(n);
        double isum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            sample.branch_currents[i] = x(Eigen::Index(i));
            sample.branch_charges[i] = x(Eigen::Index(n + i));
            isum += sample.branch_currents[i];
        }
        sample.node_voltage =
            x(dim - 1) / circ.wire_capacitance - circ.wire_resistance * isum;
        trace.states.push_back(std::move(sample));
    };

    // Spectral evaluation: every sample is computed from the initial state in
    // one shot, so there is no error accumulation across samples and the
    // carrier phase stays exact over arbitrarily many periods. Stepping with
    // matrix exponentials instead would compound their phase roundoff, which
    // at omega*dt ~ 1e4 rad per step is far too coarse for the 1e-6-level
    // current/velocity correspondence this module promises.
    const Eigen::EigenSolver<Eigen::MatrixXd> eig(scaled);
    bool spectral = eig.info() == Eigen::Success;
    Eigen::VectorXcd vals, z0;
    Eigen::MatrixXcd vecs;
    if (spectral) {
        vals = eig.eigenvalues();
        vecs = eig.eigenvectors();
        const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(vecs);
        const Eigen::VectorXd& sv = svd.singularValues();
        const double cond = sv(0) / sv(sv.size() - 1);
        spectral = std::isfinite(cond) && cond < 1e8;
        if (spectral)
            z0 = vecs.partialPivLu().solve(
                (d.array() * x0.array()).matrix().cast<std::complex<double>>());
    }

    if (spectral) {
        for (double t : times) {
            const Eigen::VectorXcd z = (vals.array() * t).exp() * z0.array();
            emit(((vecs * z).real().array() / d.array()).matrix());
        }
        return trace;
    }

    // Near-defective network (a critically damped branch makes the matrix
    // non-diagonalizable): fall back to stepping with matrix exponentials.
    Eigen::VectorXd x = x0;
    previous_t = 0.0;
    double cached_dt = std::numeric_limits<double>::quiet_NaN();
    Eigen::MatrixXd step;
    for (double t : times) {
        const double dt = t - previous_t;
        if (dt != 0.0) {
            if (dt != cached_dt) {
                step = (m * dt).exp();
                cached_dt = dt;
            }
            x = step * x;
        }
        previous_t = t;
        emit(x);
    }
    return trace;
}

CircuitState circuit_state_from_mechanical(const SystemConfig& cfg,
                                           const CircuitEquivalent& circ,
                                           const std::vector<double>& positions,
                                           const std::vector<double>& velocities) {
    require_two_ion_config(cfg, "circuit_state_from_mechanical");
    require(positions.size() == 2 && velocities.size() == 2,
            "circuit_state_from_mechanical: two positions and velocities required");

    const double H = cfg.geometry.wire_height;
    const double q = cfg.species.charge;

    CircuitState state;
    double charge_sum = 0.0;
    double current_sum = 0.0;
    for (std::size_t i = 0; i < 2; ++i) {
        const double k = q * beta_for_ion(cfg, i) / H;  // transduction factor [C/m]
        state.branch_currents.push_back(k * velocities[i]);
        state.branch_charges.push_back(k * positions[i]);
        charge_sum += k * positions[i];
        current_sum += k * velocities[i];
    }
    // Floating wire stays neutral: the wire capacitor holds the negated image
    // charge. Node voltage follows from q_C and the resistive drop.
    const double q_wire = -charge_sum;
    state.node_voltage =
        q_wire / circ.wire_capacitance - circ.wire_resistance * current_sum;
    return state;
}

double circuit_energy(const CircuitEquivalent& circ, const CircuitState& state) {
    validate_network(circ);
    const std::size_t n = circ.branch_count();
    require(state.branch_currents.size() == n && state.branch_charges.size() == n,
            "circuit_energy: state size does not match branch count");

    double current_sum = 0.0;
    for (double i : state.branch_currents) current_sum += i;
    const double q_wire = circ.wire_capacitance *
                          (state.node_voltage + circ.wire_resistance * current_sum);

    double energy = q_wire * q_wire / (2.0 * circ.wire_capacitance);
    for (std::size_t i = 0; i < n; ++i) {
        energy += 0.5 * circ.ion_inductance[i] * state.branch_currents[i] *
                  state.branch_currents[i];
        energy += state.branch_charges[i] * state.branch_charges[i] /
                  (2.0 * branch_cap(circ, i));
    }
    return energy;
}

double leakage_decay_constant(const CircuitEquivalent& circ) {
    require(circ.wire_capacitance > 0.0,
            "leakage_decay_constant: wire capacitance must be positive");
    require(circ.leakage_resistance > 0.0,
            "leakage_decay_constant: leakage resistance must be positive");
    if (!std::isfinite(circ.leakage_resistance))
        return std::numeric_limits<double>::infinity();
    return 4.0 * circ.leakage_resistance * circ.wire_capacitance;
}

}  // namespace ionwire
