#pragma once

#include <stdexcept>
#include <string>

namespace zigzag {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid argument or malformed input.
struct InvalidArgument : Error {
    using Error::Error;
};

/// Division by zero in a finite field.
struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero in finite field") {}
};

/// A requested element is not primitive.
struct NotPrimitive : Error {
    using Error::Error;
};

/// More erasures/errors than the code can handle.
struct CapabilityExceeded : Error {
    using Error::Error;
};

/// A linear system turned out singular where the code promised solvability.
struct SingularSystem : Error {
    using Error::Error;
};

/// Filesystem or serialization failure.
struct IoError : Error {
    using Error::Error;
};

} // namespace zigzag
