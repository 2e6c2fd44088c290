#include "ionwire/dynamics.hpp"

#include <cmath>
#include <complex>
#include <sstream>

#include "ionwire/constants.hpp"
#include "ionwire/errors.hpp"

namespace ionwire {

namespace {

constexpr double two_pi = 2.0 * constants::pi;

// Initial states may not crowd the truncation edge; results may not pile
// population into the outermost layer.
constexpr double initial_edge_budget = 1e-8;
constexpr double evolved_edge_budget = 1e-6;

void check_two_ion_state(const ClassicalState& state) {
    if (state.positions.size() != 2 || state.momenta.size() != 2)
        throw DomainError("evolve_classical: state must hold exactly two ions");
}

// Normal-mode data of a quadratic form K/m with equal masses.
struct NormalModes {
    Eigen::MatrixXd vectors;  // orthonormal columns
    Eigen::VectorXd omegas;   // mode frequencies [rad/s]
};

NormalModes decompose(const Eigen::MatrixXd& stiffness_over_mass) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(stiffness_over_mass);
    NormalModes modes;
    modes.vectors = solver.eigenvectors();
    modes.omegas.resize(solver.eigenvalues().size());
    for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
        const double w2 = solver.eigenvalues()(k);
        if (!(w2 > 0.0)) {
            std::ostringstream msg;
            msg << "coupling destabilizes normal mode " << k << " (omega^2 = " << w2
                << " rad^2/s^2); require |gamma| < m omega_i omega_j";
            throw UnstableCouplingError(msg.str());
        }
        modes.omegas(k) = std::sqrt(w2);
    }
    return modes;
}

ClassicalState evolve_modes(const Eigen::MatrixXd& stiffness_over_mass, double mass,
                            const ClassicalState& initial, double t) {
    const Eigen::Index n = stiffness_over_mass.rows();
    const NormalModes modes = decompose(stiffness_over_mass);

    Eigen::Map<const Eigen::VectorXd> y0(initial.positions.data(), n);
    Eigen::Map<const Eigen::VectorXd> p0(initial.momenta.data(), n);
    const Eigen::VectorXd q0 = modes.vectors.transpose() * y0;
    const Eigen::VectorXd pq0 = modes.vectors.transpose() * p0;

    Eigen::VectorXd q(n), pq(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const double w = modes.omegas(k);
        const double c = std::cos(w * t);
        const double s = std::sin(w * t);
        q(k) = q0(k) * c + pq0(k) / (mass * w) * s;
        pq(k) = pq0(k) * c - q0(k) * mass * w * s;
    }

    const Eigen::VectorXd y = modes.vectors * q;
    const Eigen::VectorXd p = modes.vectors * pq;
    ClassicalState out;
    out.positions.assign(y.data(), y.data() + n);
    out.momenta.assign(p.data(), p.data() + n);
    return out;
}

Eigen::MatrixXd pair_stiffness_over_mass(const TwoModeHamiltonian& sys) {
    Eigen::MatrixXd m(2, 2);
    m << sys.omega1 * sys.omega1, sys.gamma / sys.mass, sys.gamma / sys.mass,
        sys.omega2 * sys.omega2;
    return m;
}

void require_resonant(const TwoModeHamiltonian& sys, const char* op) {
    if (!sys.resonant()) {
        std::ostringstream msg;
        msg << op << ": mode frequencies differ (" << sys.omega1 << " vs " << sys.omega2
            << " rad/s); the closed-form exchange expressions assume resonance - use "
               "evolve_classical/evolve_quantum for detuned pairs";
        throw NonResonantError(msg.str());
    }
}

double principal_angle(double theta) {
    double r = std::remainder(theta, two_pi);  // in [-pi, pi]
    if (r <= -constants::pi) r = constants::pi;
    return r;
}

}  // namespace

TwoModeHamiltonian TwoModeHamiltonian::from_config(const SystemConfig& cfg) {
    if (cfg.ion_count() != 2)
        throw DomainError("TwoModeHamiltonian::from_config: exactly two ions required");
    const CouplingResult coupling = coupling_constant(cfg);
    return TwoModeHamiltonian{cfg.species.mass, cfg.modes.angular_frequencies[0],
                              cfg.modes.angular_frequencies[1], coupling.gamma};
}

bool TwoModeHamiltonian::resonant(double rel_tol) const {
    return std::abs(omega1 - omega2) <= rel_tol * std::max(omega1, omega2);
}

ExchangeResult exchange_time(const TwoModeHamiltonian& sys) {
    require_resonant(sys, "exchange_time");
    if (!(sys.gamma > 0.0))
        throw DomainError("exchange_time: coupling constant must be positive");
    const double omega = sys.omega1;

    ExchangeResult result;
    result.gamma = sys.gamma;
    result.resonant = true;
    result.t_ex = constants::pi * omega * sys.mass / sys.gamma;
    result.theta =
        constants::pi * (sys.mass * omega * omega / sys.gamma + 0.5);
    result.theta_principal = principal_angle(result.theta);
    result.winding =
        std::llround((result.theta - result.theta_principal) / two_pi);
    return result;
}

ExchangeResult exchange_time(const SystemConfig& cfg) {
    return exchange_time(TwoModeHamiltonian::from_config(cfg));
}

ClassicalState evolve_classical(const TwoModeHamiltonian& sys,
                                const ClassicalState& initial, double t) {
    check_two_ion_state(initial);
    return evolve_modes(pair_stiffness_over_mass(sys), sys.mass, initial, t);
}

double classical_energy(const TwoModeHamiltonian& sys, const ClassicalState& state) {
    check_two_ion_state(state);
    const double y1 = state.positions[0], y2 = state.positions[1];
    const double p1 = state.momenta[0], p2 = state.momenta[1];
    return (p1 * p1 + p2 * p2) / (2.0 * sys.mass) +
           0.5 * sys.mass *
               (sys.omega1 * sys.omega1 * y1 * y1 + sys.omega2 * sys.omega2 * y2 * y2) +
           sys.gamma * y1 * y2;
}

double ion_energy(const TwoModeHamiltonian& sys, const ClassicalState& state, int ion) {
    check_two_ion_state(state);
    if (ion != 0 && ion != 1) throw DomainError("ion_energy: ion must be 0 or 1");
    const double y = state.positions[ion];
    const double p = state.momenta[ion];
    const double w = ion == 0 ? sys.omega1 : sys.omega2;
    return p * p / (2.0 * sys.mass) + 0.5 * sys.mass * w * w * y * y;
}

TwoModePropagator::TwoModePropagator(const TwoModeHamiltonian& sys, int n_max, Form form)
    : n_max_(n_max) {
    if (n_max_ < 1) throw DomainError("TwoModePropagator: n_max must be at least 1");
    if (!(sys.mass > 0.0) || !(sys.omega1 > 0.0) || !(sys.omega2 > 0.0))
        throw DomainError("TwoModePropagator: mass and frequencies must be positive");
    if (form == Form::rotating_wave) require_resonant(sys, "TwoModePropagator(rwa)");

    oscillator_length_[0] = std::sqrt(constants::planck_hbar / (2.0 * sys.mass * sys.omega1));
    oscillator_length_[1] = std::sqrt(constants::planck_hbar / (2.0 * sys.mass * sys.omega2));

    // H/hbar in the product number basis. The coupling rate
    // g = gamma l1 l2 / hbar = gamma / (2 m sqrt(w1 w2)) is all that survives
    // of hbar, so the matrix is well-scaled for any unit system.
    const int d = n_max_ + 1;
    const Eigen::Index dim = Eigen::Index(d) * d;
    const double g = sys.gamma / (2.0 * sys.mass * std::sqrt(sys.omega1 * sys.omega2));

    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    for (int n1 = 0; n1 < d; ++n1)
        for (int n2 = 0; n2 < d; ++n2)
            h(Eigen::Index(n1) * d + n2, Eigen::Index(n1) * d + n2) =
                sys.omega1 * n1 + sys.omega2 * n2;

    auto idx = [d](int n1, int n2) { return Eigen::Index(n1) * d + n2; };
    if (form == Form::full) {
        // (a1 + a1^d)(a2 + a2^d): four corners of each (n1, n2).
        for (int n1 = 0; n1 < d - 1; ++n1) {
            for (int n2 = 0; n2 < d - 1; ++n2) {
                const double el = g * std::sqrt(double(n1 + 1)) * std::sqrt(double(n2 + 1));
                h(idx(n1 + 1, n2 + 1), idx(n1, n2)) += el;
                h(idx(n1, n2), idx(n1 + 1, n2 + 1)) += el;
            }
        }
        for (int n1 = 0; n1 < d - 1; ++n1) {
            for (int n2 = 1; n2 < d; ++n2) {
                const double el = g * std::sqrt(double(n1 + 1)) * std::sqrt(double(n2));
                h(idx(n1 + 1, n2 - 1), idx(n1, n2)) += el;
                h(idx(n1, n2), idx(n1 + 1, n2 - 1)) += el;
            }
        }
    } else {
        // Excitation-conserving part only: a1^d a2 + a1 a2^d.
        for (int n1 = 0; n1 < d - 1; ++n1) {
            for (int n2 = 1; n2 < d; ++n2) {
                const double el = g * std::sqrt(double(n1 + 1)) * std::sqrt(double(n2));
                h(idx(n1 + 1, n2 - 1), idx(n1, n2)) += el;
                h(idx(n1, n2), idx(n1 + 1, n2 - 1)) += el;
            }
        }
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
    eigenvectors_ = solver.eigenvectors();
    eigenrates_ = solver.eigenvalues();
}

QuantumState TwoModePropagator::evolve(const QuantumState& initial, double t) const {
    if (initial.n_max() != n_max_)
        throw DomainError("TwoModePropagator::evolve: state truncation mismatch");

    const double entry_leak = initial.edge_population(2);
    if (entry_leak >= initial_edge_budget) {
        std::ostringstream msg;
        msg << "initial state carries " << entry_leak
            << " population in the top two occupation layers (budget "
            << initial_edge_budget << "); enlarge n_max";
        throw TruncationLeakError(msg.str());
    }

    const Eigen::VectorXcd projected =
        eigenvectors_.transpose() * initial.amplitudes();
    Eigen::VectorXcd phased(projected.size());
    for (Eigen::Index k = 0; k < projected.size(); ++k)
        phased(k) = std::polar(1.0, -eigenrates_(k) * t) * projected(k);
    QuantumState result(n_max_, eigenvectors_ * phased);

    const double exit_leak = result.edge_population(1);
    if (exit_leak > evolved_edge_budget) {
        std::ostringstream msg;
        msg << "evolved state carries " << exit_leak
            << " population in the top occupation layer (budget " << evolved_edge_budget
            << ") at t = " << t << " s; enlarge n_max";
        throw TruncationLeakError(msg.str());
    }
    return result;
}

double TwoModePropagator::position_expectation(const QuantumState& state,
                                               int mode) const {
    if (mode != 0 && mode != 1)
        throw DomainError("position_expectation: mode must be 0 or 1");
    if (state.n_max() != n_max_)
        throw DomainError("position_expectation: state truncation mismatch");

    const int d = n_max_ + 1;
    const auto& amp = state.amplitudes();
    double acc = 0.0;
    // <a + a^d> = 2 Re sum sqrt(n+1) conj(c_n) c_{n+1} along the mode axis.
    for (int n1 = 0; n1 < d; ++n1) {
        for (int n2 = 0; n2 < d; ++n2) {
            if (mode == 0 && n1 + 1 < d) {
                acc += 2.0 * std::sqrt(double(n1 + 1)) *
                       std::real(std::conj(amp(Eigen::Index(n1) * d + n2)) *
                                 amp(Eigen::Index(n1 + 1) * d + n2));
            } else if (mode == 1 && n2 + 1 < d) {
                acc += 2.0 * std::sqrt(double(n2 + 1)) *
                       std::real(std::conj(amp(Eigen::Index(n1) * d + n2)) *
                                 amp(Eigen::Index(n1) * d + n2 + 1));
            }
        }
    }
    return oscillator_length_[mode] * acc;
}

QuantumState evolve_quantum(const TwoModeHamiltonian& sys, const QuantumState& initial,
                            double t, int n_max) {
    return TwoModePropagator(sys, n_max, TwoModePropagator::Form::full)
        .evolve(initial, t);
}

QuantumState evolve_rwa(const TwoModeHamiltonian& sys, const QuantumState& initial,
                        double t, int n_max) {
    return TwoModePropagator(sys, n_max, TwoModePropagator::Form::rotating_wave)
        .evolve(initial, t);
}

CoherentExchange coherent_exchange(const TwoModeHamiltonian& sys,
                                   std::complex<double> mu) {
    const ExchangeResult ex = exchange_time(sys);
    return CoherentExchange{ex.t_ex,
                            mu * std::polar(1.0, -ex.theta_principal)};
}

double rwa_error_metric(const TwoModeHamiltonian& sys, std::span<const double> t_grid) {
    require_resonant(sys, "rwa_error_metric");
    if (t_grid.empty()) throw DomainError("rwa_error_metric: empty time grid");

    const double omega = sys.omega1;
    const double envelope_rate = sys.gamma / (sys.mass * omega);  // beat frequency

    ClassicalState initial{{1.0, 0.0}, {0.0, 0.0}};
    const double total = ion_energy(sys, initial, 0);

    double worst = 0.0;
    for (double t : t_grid) {
        const ClassicalState state = evolve_classical(sys, initial, t);
        const double exact = ion_energy(sys, state, 0);
        const double c = std::cos(envelope_rate * t / 2.0);
        const double envelope = total * c * c;
        worst = std::max(worst, std::abs(exact - envelope) / total);
    }
    return worst;
}

CouplingMatrix build_n_ion_coupling(const SystemConfig& cfg) {
    ValidationReport report = validate_config(cfg);
    if (!report.ok()) {
        std::ostringstream msg;
        msg << "build_n_ion_coupling: invalid config:";
        for (const auto& e : report.errors) msg << "\n  " << e;
        throw DomainError(msg.str());
    }

    const std::size_t n = cfg.ion_count();
    const double H = cfg.geometry.wire_height;
    const double L = cfg.geometry.wire_length;
    const double q = cfg.species.charge;
    const double H2 = H * H;
    const double alpha = geometry_alpha(H, cfg.geometry.wire_radius);

    CouplingMatrix result;
    result.gamma = Eigen::MatrixXd::Zero(Eigen::Index(n), Eigen::Index(n));

    std::size_t pair_index = 0;
    const bool have_separations = !cfg.geometry.ion_separations.empty();
    for (std::size_t i = 0; i < n; ++i) {
        const double hi = cfg.geometry.ion_heights[i];
        for (std::size_t j = i + 1; j < n; ++j, ++pair_index) {
            const double hj = cfg.geometry.ion_heights[j];
            const double value =
                2.0 * q * q * H2 /
                (constants::pi * constants::vacuum_permittivity * alpha * L *
                 (H2 - hi * hi) * (H2 - hj * hj));
            result.gamma(Eigen::Index(i), Eigen::Index(j)) = value;
            result.gamma(Eigen::Index(j), Eigen::Index(i)) = value;

            if (have_separations && pair_index < cfg.geometry.ion_separations.size()) {
                const double d = cfg.geometry.ion_separations[pair_index];
                std::ostringstream msg;
                if (d < 10.0 * H) {
                    msg << "pair (" << i << "," << j << "): separation " << d
                        << " m < 10 H; direct Coulomb coupling competes with the "
                           "wire-mediated term";
                    result.warnings.push_back(msg.str());
                } else if (d > L) {
                    msg << "pair (" << i << "," << j << "): separation " << d
                        << " m exceeds the wire length";
                    result.warnings.push_back(msg.str());
                }
            }
        }
    }
    return result;
}

NModeHamiltonian NModeHamiltonian::from_config(const SystemConfig& cfg) {
    NModeHamiltonian sys;
    sys.mass = cfg.species.mass;
    sys.omegas = cfg.modes.angular_frequencies;
    sys.gamma = build_n_ion_coupling(cfg).gamma;
    return sys;
}

ClassicalState evolve_classical(const NModeHamiltonian& sys,
                                const ClassicalState& initial, double t) {
    const std::size_t n = sys.omegas.size();
    if (initial.positions.size() != n || initial.momenta.size() != n)
        throw DomainError("evolve_classical: state size does not match mode count");
    if (static_cast<std::size_t>(sys.gamma.rows()) != n ||
        static_cast<std::size_t>(sys.gamma.cols()) != n)
        throw DomainError("evolve_classical: coupling matrix size mismatch");

    Eigen::MatrixXd m = sys.gamma / sys.mass;
    for (std::size_t i = 0; i < n; ++i)
        m(Eigen::Index(i), Eigen::Index(i)) = sys.omegas[i] * sys.omegas[i];
    return evolve_modes(m, sys.mass, initial, t);
}

double classical_energy(const NModeHamiltonian& sys, const ClassicalState& state) {
    const std::size_t n = sys.omegas.size();
    if (state.positions.size() != n || state.momenta.size() != n)
        throw DomainError("classical_energy: state size does not match mode count");

    double energy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        energy += state.momenta[i] * state.momenta[i] / (2.0 * sys.mass);
        energy += 0.5 * sys.mass * sys.omegas[i] * sys.omegas[i] * state.positions[i] *
                  state.positions[i];
        for (std::size_t j = i + 1; j < n; ++j)
            energy += sys.gamma(Eigen::Index(i), Eigen::Index(j)) * state.positions[i] *
                      state.positions[j];
    }
    return energy;
}

}  // namespace ionwire
