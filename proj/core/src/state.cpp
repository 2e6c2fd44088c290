#include "ionwire/state.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ionwire/errors.hpp"

namespace ionwire {

namespace {

// Coefficients of |mu> in the number basis, normalized over the truncation.
Eigen::VectorXcd coherent_coefficients(int dim, std::complex<double> mu) {
    Eigen::VectorXcd c(dim);
    c(0) = 1.0;
    for (int n = 1; n < dim; ++n) c(n) = c(n - 1) * mu / std::sqrt(double(n));
    c /= std::sqrt(c.squaredNorm());
    return c;
}

}  // namespace

QuantumState::QuantumState(int n_max, Eigen::VectorXcd amplitudes)
    : n_max_(n_max), amp_(std::move(amplitudes)) {
    if (n_max_ < 1) throw DomainError("QuantumState: n_max must be at least 1");
    const auto d = static_cast<Eigen::Index>(n_max_ + 1);
    if (amp_.size() != d * d) {
        std::ostringstream msg;
        msg << "QuantumState: amplitude vector has " << amp_.size()
            << " entries, expected " << d * d;
        throw DomainError(msg.str());
    }
    const double norm2 = amp_.squaredNorm();
    if (std::abs(norm2 - 1.0) > 1e-9) {
        if (norm2 <= 0.0) throw DomainError("QuantumState: zero state");
        amp_ /= std::sqrt(norm2);
    }
}

QuantumState QuantumState::fock(int n_max, int n1, int n2) {
    if (n1 < 0 || n2 < 0 || n1 > n_max || n2 > n_max)
        throw DomainError("QuantumState::fock: occupation outside the truncation");
    const int d = n_max + 1;
    Eigen::VectorXcd amp = Eigen::VectorXcd::Zero(Eigen::Index(d) * d);
    amp(Eigen::Index(n1) * d + n2) = 1.0;
    return QuantumState(n_max, std::move(amp));
}

QuantumState QuantumState::fock_superposition(int n_max, int mode, int n) {
    if (mode != 0 && mode != 1)
        throw DomainError("QuantumState::fock_superposition: mode must be 0 or 1");
    if (n < 1 || n > n_max)
        throw DomainError("QuantumState::fock_superposition: occupation outside the truncation");
    const int d = n_max + 1;
    Eigen::VectorXcd amp = Eigen::VectorXcd::Zero(Eigen::Index(d) * d);
    const double w = 1.0 / std::sqrt(2.0);
    amp(0) = w;
    amp(mode == 0 ? Eigen::Index(n) * d : Eigen::Index(n)) = w;
    return QuantumState(n_max, std::move(amp));
}

QuantumState QuantumState::coherent(int n_max, std::complex<double> mu1,
                                    std::complex<double> mu2) {
    const double cap = n_max / 4.0;
    if (std::norm(mu1) > cap || std::norm(mu2) > cap)
        throw DomainError(
            "QuantumState::coherent: |mu|^2 must not exceed n_max/4; enlarge the "
            "truncation to keep the Poisson tail away from the edge");
    const int d = n_max + 1;
    const Eigen::VectorXcd c1 = coherent_coefficients(d, mu1);
    const Eigen::VectorXcd c2 = coherent_coefficients(d, mu2);
    Eigen::VectorXcd amp(Eigen::Index(d) * d);
    for (int n1 = 0; n1 < d; ++n1)
        for (int n2 = 0; n2 < d; ++n2) amp(Eigen::Index(n1) * d + n2) = c1(n1) * c2(n2);
    return QuantumState(n_max, std::move(amp));
}

std::complex<double> QuantumState::amplitude(int n1, int n2) const {
    if (n1 < 0 || n2 < 0 || n1 > n_max_ || n2 > n_max_)
        throw std::out_of_range("QuantumState::amplitude: occupation out of range");
    return amp_(Eigen::Index(n1) * (n_max_ + 1) + n2);
}

double QuantumState::squared_norm() const { return amp_.squaredNorm(); }

double QuantumState::mode_population(int mode, int n) const {
    if (mode != 0 && mode != 1)
        throw std::out_of_range("QuantumState::mode_population: mode must be 0 or 1");
    if (n < 0 || n > n_max_) return 0.0;
    const int d = n_max_ + 1;
    double p = 0.0;
    for (int k = 0; k < d; ++k) {
        const Eigen::Index idx =
            mode == 0 ? Eigen::Index(n) * d + k : Eigen::Index(k) * d + n;
        p += std::norm(amp_(idx));
    }
    return p;
}

double QuantumState::mean_occupation(int mode) const {
    double acc = 0.0;
    for (int n = 1; n <= n_max_; ++n) acc += n * mode_population(mode, n);
    return acc;
}

double QuantumState::edge_population(int layers) const {
    if (layers < 1) return 0.0;
    const int d = n_max_ + 1;
    const int lo = std::max(0, d - layers);
    double p = 0.0;
    for (int n1 = 0; n1 < d; ++n1) {
        for (int n2 = 0; n2 < d; ++n2) {
            if (n1 >= lo || n2 >= lo) p += std::norm(amp_(Eigen::Index(n1) * d + n2));
        }
    }
    return p;
}

double QuantumState::fidelity(const QuantumState& other) const {
    if (other.n_max_ != n_max_)
        throw DomainError("QuantumState::fidelity: truncation mismatch");
    return std::norm(amp_.dot(other.amp_));
}

}  // namespace ionwire
