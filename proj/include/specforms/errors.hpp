#pragma once

#include <stdexcept>
#include <string>

namespace specforms {

/// Base class for all errors thrown by this library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid group kind / parameter / configuration value.
class parameter_error : public error {
public:
    using error::error;
};

/// A quantity that must be an exact integer (inner product, multiplicity)
/// came out further than the rounding tolerance from one. Signals a
/// corrupted character table or a broken identity, not a user mistake.
class numerical_error : public error {
public:
    using error::error;
};

/// The supplied spectrum truncation is too short for the requested
/// evaluation to meet its truncation-error contract.
class insufficient_spectrum_error : public error {
public:
    using error::error;
};

/// Adaptive quadrature failed to converge to the requested tolerance.
class integration_error : public error {
public:
    using error::error;
};

} // namespace specforms
