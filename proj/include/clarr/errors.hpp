#pragma once

#include <stdexcept>
#include <string>

namespace clarr {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Arithmetic between two scalars living in distinct nontrivial quadratic extensions.
struct MixedExtensionError : Error {
    using Error::Error;
};

struct DivisionByZeroError : Error {
    using Error::Error;
};

/// A curve (or an addition to one) has a repeated component.
struct NotReducedError : Error {
    using Error::Error;
};

/// A conic component whose symmetric matrix is singular.
struct SingularConicError : Error {
    using Error::Error;
};

struct EmptyCurveError : Error {
    using Error::Error;
};

struct UnknownIdError : Error {
    using Error::Error;
};

struct LastComponentError : Error {
    using Error::Error;
};

/// An intersection point does not live in any single quadratic extension of Q.
struct UnrepresentablePointError : Error {
    using Error::Error;
};

/// A generic component is singular at a point for which no local data was supplied.
struct MissingSingularDataError : Error {
    using Error::Error;
};

struct RangeError : Error {
    using Error::Error;
};

/// mu + branches - 1 is odd; signals an upstream bug in mu or the branch count.
struct ParityError : Error {
    using Error::Error;
};

/// Truncated local-algebra dimensions kept growing past the safety cap.
struct NotFiniteColengthError : Error {
    using Error::Error;
};

/// The Hilbert function scan exceeded its degree cap without stabilizing.
struct StabilizationFailureError : Error {
    using Error::Error;
};

/// An exact integer identity that must hold failed; always a hard failure.
struct IdentityViolatedError : Error {
    using Error::Error;
};

struct NotALineError : Error {
    using Error::Error;
};

struct NotAConicError : Error {
    using Error::Error;
};

struct NotFreeError : Error {
    using Error::Error;
};

/// Scene file or inline component failed schema validation.
struct SchemaError : Error {
    using Error::Error;
};

} // namespace clarr
