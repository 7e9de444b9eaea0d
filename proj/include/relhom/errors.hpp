#pragma once

#include <stdexcept>
#include <string>

namespace relhom {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operand shapes do not line up (row/column counts, chain composability).
struct DimensionMismatch : Error {
    using Error::Error;
};

/// Operands live over different coefficient fields.
struct FieldMismatch : Error {
    using Error::Error;
};

/// Operands live over different algebras.
struct AlgebraMismatch : Error {
    using Error::Error;
};

/// A constructor or loader received data violating a structural invariant.
struct ValidationError : Error {
    using Error::Error;
};

/// Session file could not be parsed or resolved.
struct SessionError : Error {
    using Error::Error;
};

/// A task-level failure that is a genuine error, not a refuted/infeasible answer
/// (FaithfulnessNotEstablished, ProfileExhausted, SeparabilityMissing, ...).
struct TaskError : Error {
    using Error::Error;
};

}  // namespace relhom
