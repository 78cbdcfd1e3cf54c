#pragma once

#include <stdexcept>
#include <string>

namespace scsa {

// Base class for everything thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad input data: malformed files, invalid parameters, broken preconditions.
struct DataError : Error {
    using Error::Error;
};

// Numerical failure: solver did not converge, degenerate factorization, ...
struct NumericalError : Error {
    using Error::Error;
};

struct InvalidDomainError : DataError {
    using DataError::DataError;
};
struct InvalidParameterError : DataError {
    using DataError::DataError;
};
struct ParseError : DataError {
    using DataError::DataError;
};
struct NonEquidistantGridError : DataError {
    using DataError::DataError;
};
struct NonSymmetricInputError : DataError {
    using DataError::DataError;
};
struct LengthMismatchError : DataError {
    using DataError::DataError;
};
struct NegativeSignalError : DataError {
    using DataError::DataError;
};
struct ZeroSignalError : DataError {
    using DataError::DataError;
};
struct OutOfRangeError : DataError {
    using DataError::DataError;
};
struct GridTooCoarseError : DataError {
    using DataError::DataError;
};
struct TargetCountUnreachableError : DataError {
    using DataError::DataError;
};
struct NoConvergenceError : NumericalError {
    using NumericalError::NumericalError;
};
struct DegenerateDeterminantError : NumericalError {
    using NumericalError::NumericalError;
};

}  // namespace scsa
