#pragma once

#include <stdexcept>

namespace qmono {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Shape or arity mismatch: non-square matrices, wrong qubit counts, bad index sets.
struct DimensionError : Error {
    using Error::Error;
};

/// Scalar argument outside its admissible range, including alpha-regime violations.
struct DomainError : Error {
    using Error::Error;
};

/// Violated value invariant: norm, Hermiticity, positivity, isometry, file schema.
struct ValidationError : Error {
    using Error::Error;
};

/// File access or parse failure; the message carries the path.
struct IoError : Error {
    using Error::Error;
};

} // namespace qmono
