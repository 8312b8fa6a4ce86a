#pragma once

#include <stdexcept>
#include <string>

namespace helab {

// Base class for all library errors so callers can catch one type.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Field data contains NaN/infinity or is otherwise unusable.
struct InvalidFieldError : Error {
    using Error::Error;
};

// A spectral field fails the Hermitian-symmetry requirement of a real field.
struct NonRealFieldError : Error {
    using Error::Error;
};

// Mixed lattice sizes or box lengths in one operation.
struct ShapeError : Error {
    using Error::Error;
};

// Input violates a divergence/mean-value constraint beyond the repair policy.
struct ConstraintViolationError : Error {
    using Error::Error;
};

// A spectral field carries a longitudinal component where a transverse one is required.
struct TransversalityError : Error {
    using Error::Error;
};

// A localized field does not fit the periodic box within tolerance.
struct TruncationError : Error {
    using Error::Error;
};

// Time integration produced non-finite values.
struct DivergenceError : Error {
    using Error::Error;
};

// Not enough samples for the requested finite-difference stencil.
struct InsufficientDataError : Error {
    using Error::Error;
};

// Bad run configuration (unknown names, invalid parameter values, malformed JSON).
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace helab
