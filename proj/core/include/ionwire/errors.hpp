#pragma once

#include <stdexcept>
#include <string>

namespace ionwire {

/// Input violates a formula's domain (geometry out of range, negative
/// temperature, ...). Maps to CLI exit code 1.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// An operation that assumes equal secular frequencies was called with a
/// detuned mode pair. The numerical propagators handle detuning; the
/// closed-form exchange expressions do not.
struct NonResonantError : DomainError {
    using DomainError::DomainError;
};

/// Coupling strong enough to destabilize the lower normal mode
/// (|γ| >= m ω1 ω2): the quadratic form is no longer positive definite.
struct UnstableCouplingError : DomainError {
    using DomainError::DomainError;
};

/// Quantum state population reached the edge of the truncated number
/// basis, so the result can no longer be trusted. Maps to CLI exit code 3.
struct TruncationLeakError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ionwire
