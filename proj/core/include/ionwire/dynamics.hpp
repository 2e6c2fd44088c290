#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "ionwire/config.hpp"
#include "ionwire/electrostatics.hpp"
#include "ionwire/state.hpp"

namespace ionwire {

/// Parameters of the bilinear two-oscillator Hamiltonian
/// H = p1²/2m + ½mω1²y1² + p2²/2m + ½mω2²y2² + γ y1 y2.
///
/// Everything in this module is driven by these four numbers, so tests can
/// dial the dimensionless coupling γ/(mω²) anywhere they like; from_config
/// derives them from a physical two-ion system.
struct TwoModeHamiltonian {
    double mass;    ///< [kg], both ions
    double omega1;  ///< [rad/s]
    double omega2;  ///< [rad/s]
    double gamma;   ///< [N/m]

    static TwoModeHamiltonian from_config(const SystemConfig& cfg);

    /// Dimensionless coupling strength γ/(m ω1 ω2).
    double coupling_ratio() const { return gamma / (mass * omega1 * omega2); }

    bool resonant(double rel_tol = 1e-9) const;
};

/// Exchange time and phase for a resonant pair.
struct ExchangeResult {
    double t_ex;            ///< π ω m / γ  [s]
    double theta;           ///< π(mω²/γ + 1/2)  [rad], full accumulated value
    double theta_principal; ///< theta reduced to (-π, π]
    std::int64_t winding;   ///< theta = theta_principal + 2π·winding
    double gamma;           ///< coupling used [N/m]
    bool resonant;          ///< always true on return
};

/// Closed-form exchange time/phase. Requires a resonant pair (equal
/// frequencies to 1e-9 relative); throws NonResonantError otherwise with a
/// pointer at the numerical propagators, which handle detuning.
ExchangeResult exchange_time(const TwoModeHamiltonian& sys);
ExchangeResult exchange_time(const SystemConfig& cfg);

/// Exact classical evolution via normal modes. Throws UnstableCouplingError
/// when |γ| >= m ω1 ω2. State must hold exactly two ions.
ClassicalState evolve_classical(const TwoModeHamiltonian& sys,
                                const ClassicalState& initial, double t);

/// Total energy of a classical state under the pair Hamiltonian [J].
double classical_energy(const TwoModeHamiltonian& sys, const ClassicalState& state);

/// Energy stored in one ion's bare oscillator, p²/2m + ½mω²y² [J].
double ion_energy(const TwoModeHamiltonian& sys, const ClassicalState& state, int ion);

/// Truncated-basis propagator for the two-mode quantum problem.
///
/// Diagonalizes H/ħ once (real symmetric, dimension (n_max+1)²) and then
/// evaluates exp(-iHt/ħ)ψ for arbitrary t — there is no time stepping, so
/// requested times can be hours of simulated dynamics at no extra cost.
/// The rotating-wave form keeps only the excitation-conserving part of the
/// coupling; it requires resonance and is exactly unitary on every total-
/// occupation block that fits the truncation.
class TwoModePropagator {
public:
    enum class Form { full, rotating_wave };

    TwoModePropagator(const TwoModeHamiltonian& sys, int n_max, Form form = Form::full);

    /// exp(-iHt/ħ) applied to `initial`.
    ///
    /// Refuses initial states already crowding the truncation edge (top two
    /// layers >= 1e-8) and results whose top-layer population exceeds 1e-6;
    /// both throw TruncationLeakError carrying the measured leak.
    QuantumState evolve(const QuantumState& initial, double t) const;

    int n_max() const { return n_max_; }

    /// <y_mode> of a state, in meters (uses the mode's oscillator length).
    double position_expectation(const QuantumState& state, int mode) const;

private:
    int n_max_;
    double oscillator_length_[2];
    Eigen::MatrixXd eigenvectors_;   // columns: eigenvectors of H/ħ
    Eigen::VectorXd eigenrates_;     // eigenvalues of H/ħ [rad/s]
};

/// One-shot full evolution (builds a propagator per call; use
/// TwoModePropagator directly when sampling many times).
QuantumState evolve_quantum(const TwoModeHamiltonian& sys, const QuantumState& initial,
                            double t, int n_max = 20);

/// One-shot rotating-wave evolution. Throws NonResonantError off resonance.
QuantumState evolve_rwa(const TwoModeHamiltonian& sys, const QuantumState& initial,
                        double t, int n_max = 20);

/// Coherent-state exchange bookkeeping: after one exchange time a coherent
/// amplitude μ in mode 1 reappears in mode 2 as μ·e^{-iΘ}.
struct CoherentExchange {
    double t_ex;
    std::complex<double> mu_out;
};
CoherentExchange coherent_exchange(const TwoModeHamiltonian& sys, std::complex<double> mu);

/// Max deviation between the exact single-ion energy trace and the
/// rotating-wave envelope E·cos²(γt/2mω), normalized by the total energy,
/// over the supplied time grid. Benchmark initial condition: ion 1
/// displaced, everything else at rest. Requires resonance.
double rwa_error_metric(const TwoModeHamiltonian& sys, std::span<const double> t_grid);

/// Pairwise coupling matrix for N >= 2 ions, with per-pair regime warnings
/// (close pairs, separations beyond the wire). gamma(i,i) = 0.
struct CouplingMatrix {
    Eigen::MatrixXd gamma;            ///< symmetric, zero diagonal [N/m]
    std::vector<std::string> warnings;
};
CouplingMatrix build_n_ion_coupling(const SystemConfig& cfg);

/// N-ion quadratic Hamiltonian: shared mass, per-ion frequencies, pairwise
/// spring couplings.
struct NModeHamiltonian {
    double mass;
    std::vector<double> omegas;
    Eigen::MatrixXd gamma;

    static NModeHamiltonian from_config(const SystemConfig& cfg);
};

/// Exact N-ion classical evolution by diagonalizing the quadratic form.
/// Throws UnstableCouplingError if any normal mode has ω² <= 0.
ClassicalState evolve_classical(const NModeHamiltonian& sys,
                                const ClassicalState& initial, double t);

/// Total energy of an N-ion classical state [J].
double classical_energy(const NModeHamiltonian& sys, const ClassicalState& state);

}  // namespace ionwire
