#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace ionwire {

/// Phase-space snapshot of N classical ions (positions [m], momenta [kg m/s]).
struct ClassicalState {
    std::vector<double> positions;
    std::vector<double> momenta;

    std::size_t size() const { return positions.size(); }
};

/// Two-mode quantum state in a truncated number basis.
///
/// Amplitudes are stored flattened with index n1*(n_max+1) + n2, i.e.
/// amplitude(n1, n2) is the coefficient of |n1> ⊗ |n2>. States are values:
/// evolution returns new states and factories return normalized ones.
class QuantumState {
public:
    QuantumState(int n_max, Eigen::VectorXcd amplitudes);

    /// |n1> ⊗ |n2>. Occupations must fit the truncation.
    static QuantumState fock(int n_max, int n1, int n2);

    /// (|0> + |n>)/√2 in one mode (0 or 1), vacuum in the other.
    static QuantumState fock_superposition(int n_max, int mode, int n);

    /// Coherent state |μ1> ⊗ |μ2>. Requires |μ|^2 <= n_max/4 per mode so the
    /// Poisson tail stays far from the truncation edge.
    static QuantumState coherent(int n_max, std::complex<double> mu1,
                                 std::complex<double> mu2);

    int n_max() const { return n_max_; }
    int dim() const { return n_max_ + 1; }
    const Eigen::VectorXcd& amplitudes() const { return amp_; }

    std::complex<double> amplitude(int n1, int n2) const;
    double squared_norm() const;

    /// Probability of finding `n` quanta in the given mode (marginal).
    double mode_population(int mode, int n) const;

    /// Mean occupation <n_mode>.
    double mean_occupation(int mode) const;

    /// Total population in the outermost `layers` occupation layers of either
    /// mode (n >= n_max + 1 - layers). The truncation-health indicator.
    double edge_population(int layers = 1) const;

    /// |<other|this>|^2. Dimensions must match.
    double fidelity(const QuantumState& other) const;

private:
    int n_max_;
    Eigen::VectorXcd amp_;
};

}  // namespace ionwire
