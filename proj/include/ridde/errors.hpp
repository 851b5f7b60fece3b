#pragma once

#include <stdexcept>
#include <string>

namespace ridde {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Tensor/layer shape disagreement. Message names both shapes.
struct DimensionError : Error {
    using Error::Error;
};

/// Invalid configuration value (patch geometry, missing file, bad flag).
struct ConfigError : Error {
    using Error::Error;
};

/// Precondition violation on otherwise well-formed inputs (empty softmax,
/// K larger than the store, empty eval set).
struct DomainError : Error {
    using Error::Error;
};

/// Training diverged (non-finite loss or gradient).
struct DivergenceError : Error {
    using Error::Error;
};

/// Binary file format violations. Each failure mode is a distinct type so
/// callers and tests can tell them apart.
struct FormatError : Error {
    using Error::Error;
};
struct BadMagicError : FormatError {
    using FormatError::FormatError;
};
struct VersionMismatchError : FormatError {
    using FormatError::FormatError;
};
struct ChecksumError : FormatError {
    using FormatError::FormatError;
};
struct TruncationError : FormatError {
    using FormatError::FormatError;
};

/// Parse failure in a text input (CSV cell, config file).
struct ParseError : Error {
    using Error::Error;
};

} // namespace ridde
